#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace genassoc;

TEST_CASE("interval invariants") {
  CHECK_THROWS_AS(interval(q("2"), q("1"), true, true), std::invalid_argument);
  CHECK_THROWS_AS(interval(q("1"), q("1"), true, false), std::invalid_argument);
  CHECK(interval::point(q("3")).is_point());
  CHECK(interval(q("7"), ext_rat::inf(), true, true).contains(ext_rat::inf()));
  CHECK(!interval(q("7"), ext_rat::inf(), true, false).contains(ext_rat::inf()));
}

TEST_CASE("contains respects endpoint closure") {
  const range_set s = rs("[0,2) u {3}");
  CHECK(!s.contains(q("2")));
  CHECK(s.contains(q("3")));
  CHECK(s.contains(q("0")));
  CHECK(!s.contains(q("5/2")));
  CHECK(rs("[7,inf]").contains(ext_rat::inf()));
}

TEST_CASE("canonical form is unique") {
  const range_set a = range_set::of({interval(q("0"), q("1"), true, false),
                                     interval(q("1"), q("2"), true, true),
                                     interval::point(q("3"))});
  const range_set b = range_set::of({interval(q("0"), q("2"), true, true),
                                     interval::point(q("3"))});
  CHECK(a == b);
  CHECK(a.components().size() == 2);
  // Touching open endpoints do not merge.
  const range_set c = range_set::of({interval(q("0"), q("1"), true, false),
                                     interval(q("1"), q("2"), false, true)});
  CHECK(c.components().size() == 2);
  CHECK(!c.contains(q("1")));
}

TEST_CASE("set algebra on the worked staircase") {
  CHECK(rs("[2,16]").complement() == rs("[0,2) u (16,inf]"));
  CHECK(rs("{3} u {5} u {6} u {7}").union_with(rs("[0,2) u (6,7)")) ==
        rs("[0,2) u {3} u {5} u [6,7]"));
  CHECK(rs("[1,3)").intersect(rs("[2,5]")) == rs("[2,3)"));
  CHECK(rs("[0,2)").difference(rs("[1,3]")) == rs("[0,1)"));
  CHECK(range_set().complement() == range_set::whole());
}

TEST_CASE("set algebra agrees with pointwise membership") {
  rat_source src(20240811);
  for (int round = 0; round < 40; ++round) {
    std::vector<interval> ivs;
    for (int i = 0; i < 4; ++i) {
      ext_rat a = src.point(), b = src.point();
      if (b < a) std::swap(a, b);
      if (a == b)
        ivs.push_back(interval::point(a));
      else
        ivs.push_back(interval(a, b, src.rng() % 2 == 0, src.rng() % 2 == 0));
    }
    const range_set x = range_set::of({ivs[0], ivs[1]});
    const range_set y = range_set::of({ivs[2], ivs[3]});
    const range_set u = x.union_with(y), n = x.intersect(y), d = x.difference(y),
                    c = x.complement();
    for (int t = 0; t < 25; ++t) {
      const ext_rat p = src.point();
      const bool in_x = x.contains(p), in_y = y.contains(p);
      CHECK(u.contains(p) == (in_x || in_y));
      CHECK(n.contains(p) == (in_x && in_y));
      CHECK(d.contains(p) == (in_x && !in_y));
      CHECK(c.contains(p) == !in_x);
    }
  }
}

TEST_CASE("extrema carries attainment") {
  auto e = rs("[0,2) u {3}").extrema();
  CHECK((e.inf == q("0") && e.inf_attained));
  CHECK((e.sup == q("3") && e.sup_attained));
  e = rs("(12,20]").extrema();
  CHECK((e.inf == q("12") && !e.inf_attained));
  CHECK((e.sup == q("20") && e.sup_attained));
  CHECK_THROWS_AS(range_set().extrema(), empty_set_error);
}

TEST_CASE("order span basics") {
  CHECK(range_set::point(q("5")).o_span() == range_set());
  CHECK(range_set().o_span() == range_set());
  CHECK(rs("{1} u (1,2]").o_span() == rs("[1,2)"));
  CHECK(rs("(1,2]").o_span() == rs("(1,2)"));
  CHECK(rs("[1,inf]").o_span() == rs("[1,inf)"));
}

TEST_CASE("order span equals the brute-force pair union on point sets") {
  rat_source src(7);
  for (int round = 0; round < 100; ++round) {
    std::uniform_int_distribution<int> count(0, 20);
    std::vector<ext_rat> pts;
    const int n = count(src.rng);
    for (int i = 0; i < n; ++i) pts.push_back(src.point());
    range_set s;
    for (const auto& p : pts) s = s.union_with(range_set::point(p));
    CHECK(s.o_span() == o_span_bruteforce(pts));
  }
}

TEST_CASE("range set text round trip") {
  for (const char* text : {"{}", "[0,2) u {3} u {5} u [6,7]", "[7,inf]", "(1/2,3/4)",
                           "{inf}", "[0,inf)"}) {
    auto parsed = range_set::parse(text);
    REQUIRE(parsed);
    CHECK(parsed->str() == text);
  }
  CHECK(!range_set::parse("[1,2"));
  CHECK(!range_set::parse("[2,1]"));
  CHECK(!range_set::parse("nonsense"));
}
