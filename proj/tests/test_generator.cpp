#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace genassoc;

namespace {
generator identity_gen() {
  return generator::make({{interval(q("0"), q("1"), true, true), piece_expr::affine(1, 0)}});
}
}  // namespace

TEST_CASE("evaluation picks the covering piece") {
  const generator f2 = load_generator("four_gap_staircase");
  CHECK(f2.eval(br("1/2")) == q("5"));
  CHECK(f2.eval(br("1/10")) == q("4/5"));
  const generator f3 = load_generator("tail_staircase");
  CHECK(f3.eval(br("3/5")) == q("10"));
  const generator f1 = load_generator("ramp_plateaus_mobius");
  CHECK(f1.eval(br("1")) == ext_rat::inf());
  CHECK(f1.eval(br("15/16")) == q("32"));
  CHECK_THROWS_AS(f2.eval(br("3/2")), std::domain_error);
}

TEST_CASE("one-sided limits use the adjacent closed form") {
  const generator f2 = load_generator("four_gap_staircase");
  CHECK(f2.side_limit(br("1/4"), limit_side::left) == q("2"));
  CHECK(f2.side_limit(br("0"), limit_side::left) == q("0"));
  CHECK(f2.side_limit(br("7/8"), limit_side::right) == q("7"));
  CHECK(f2.side_limit(br("1"), limit_side::right) == ext_rat::inf());
  CHECK(f2.side_limit(br("3/4"), limit_side::left) == q("5"));
  const generator f1 = load_generator("ramp_plateaus_mobius");
  CHECK(f1.side_limit(br("7/8"), limit_side::right) == q("16"));
  CHECK(f1.side_limit(br("1"), limit_side::left) == ext_rat::inf());
}

TEST_CASE("exact ranges") {
  CHECK(load_generator("four_gap_staircase").range() == rs("[0,2) u {3} u {5} u [6,7]"));
  CHECK(load_generator("tail_staircase").range() == rs("[1,4) u {8} u {10} u (12,20]"));
  CHECK(identity_gen().range() == rs("[0,1]"));
  CHECK(load_generator("ramp_plateaus_mobius").range() ==
        rs("[0,2] u {9} u {10} u (16,inf]"));
}

TEST_CASE("pseudo-inverse in closed form") {
  const generator f2 = load_generator("four_gap_staircase");
  CHECK(f2.pseudo_inverse(q("4")) == br("1/2"));
  CHECK(f2.pseudo_inverse(q("0")) == 0);
  CHECK(identity_gen().pseudo_inverse(q("1/2")) == br("1/2"));
  CHECK(f2.pseudo_inverse(ext_rat::inf()) == 1);
  CHECK(f2.pseudo_inverse(q("2")) == br("1/4"));
  CHECK(f2.pseudo_inverse(q("7")) == br("7/8"));
}

TEST_CASE("pseudo-inverse is bracketed by the grid scan") {
  for (const char* name : {"four_gap_staircase", "tail_staircase", "ramp_mobius_shifted_sum"}) {
    const generator g = load_generator(name);
    std::vector<ext_rat> ys = {q("0"),  q("1/3"), q("1"),  q("2"),  q("3"),
                               q("7/2"), q("5"),   q("19/3"), q("8"), q("40"),
                               ext_rat::inf()};
    for (const auto& y : ys) {
      const big_rat exact = g.pseudo_inverse(y);
      const big_rat scan = pseudo_inverse_scan(g, y);
      CHECK(scan <= exact);
      CHECK(exact - scan <= big_rat(1, 1024));
    }
  }
}

TEST_CASE("pseudo-inverse properties") {
  const generator f2 = load_generator("four_gap_staircase");
  big_rat prev = -1;
  for (int j = 0; j <= 64; ++j) {
    const ext_rat y{big_rat(j, 8)};
    const big_rat v = f2.pseudo_inverse(y);
    CHECK(prev <= v);
    prev = v;
  }
  for (int j = 0; j <= 32; ++j) {
    const big_rat x(j, 32);
    CHECK(f2.pseudo_inverse(f2.eval(x)) <= x);
  }
}

TEST_CASE("range matches dense sampling") {
  for (const char* name : {"four_gap_staircase", "tail_staircase", "plateau_fill_sum"}) {
    const generator g = load_generator(name);
    const range_set r = g.range();
    for (int j = 0; j <= 256; ++j) CHECK(r.contains(g.eval(big_rat(j, 256))));
    for (const auto& comp : r.components())
      for (const ext_rat* end : {&comp.lo, &comp.hi}) {
        bool reachable = false;
        for (const auto& x : g.breakpoints()) {
          if (g.eval(x) == *end || g.side_limit(x, limit_side::left) == *end ||
              g.side_limit(x, limit_side::right) == *end)
            reachable = true;
        }
        CHECK(reachable);
      }
  }
}

TEST_CASE("eval is monotone along the grid") {
  for (const char* name : {"four_gap_staircase", "tail_staircase", "ramp_plateaus_mobius"}) {
    const generator g = load_generator(name);
    ext_rat prev = q("0");
    for (int j = 0; j <= 128; ++j) {
      const ext_rat v = g.eval(big_rat(j, 128));
      CHECK(!(v < prev));
      prev = v;
    }
  }
}

TEST_CASE("class membership") {
  CHECK(load_generator("four_gap_staircase").class_f_membership().member);
  CHECK(load_generator("tail_staircase").class_f_membership().member);
  CHECK(load_generator("ramp_plateaus_mobius").class_f_membership().member);
  CHECK(identity_gen().class_f_membership().member);
  CHECK(load_generator("double_plateau_sum").class_f_membership().member);

  const auto bad = load_generator("detached_plateau_sum").class_f_membership();
  CHECK(!bad.member);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == br("1/4"));

  const auto fill = load_generator("plateau_fill_sum").class_f_membership();
  CHECK(!fill.member);
  REQUIRE(fill.witness);
  CHECK(*fill.witness == br("1/2"));
}

TEST_CASE("plateau representatives") {
  const generator f2 = load_generator("four_gap_staircase");
  CHECK(f2.b_witness(br("3/10")) == br("1/4"));
  CHECK(f2.b_witness(br("1/10")) == br("1/10"));
  CHECK(f2.b_witness(br("6/10")) == br("1/2"));
  CHECK(f2.b_witness(br("1")) == br("7/8"));  // the value 7 is first attained at 7/8
  CHECK(f2.in_b(br("1/4")));
  CHECK(!f2.in_b(br("3/10")));
  const auto plateaus = f2.plateau_values();
  CHECK(plateaus == std::vector<ext_rat>{q("3"), q("5"), q("7")});
}

TEST_CASE("validation rejects bad piece systems") {
  // Gap at 1/2: the point is uncovered.
  CHECK_THROWS_MATCHES(
      generator::make({{interval(q("0"), q("1/2"), true, false), piece_expr::affine(1, 0)},
                       {interval(q("1/2"), q("1"), false, true), piece_expr::affine(1, 0)}}),
      validation_error, Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("1/2")));
  // Overlap at 1/2.
  CHECK_THROWS_AS(
      generator::make({{interval(q("0"), q("1/2"), true, true), piece_expr::affine(1, 0)},
                       {interval(q("1/2"), q("1"), true, true), piece_expr::affine(1, 0)}}),
      validation_error);
  // Decreasing piece.
  CHECK_THROWS_AS(
      generator::make({{interval(q("0"), q("1"), true, true), piece_expr::affine(-1, 1)}}),
      validation_error);
  // Values decrease across a boundary.
  CHECK_THROWS_AS(
      generator::make({{interval(q("0"), q("1/2"), true, false), piece_expr::affine(4, 0)},
                       {interval(q("1/2"), q("1"), true, true), piece_expr::constant(q("1"))}}),
      validation_error);
  // Domain escapes [0,1].
  CHECK_THROWS_AS(
      generator::make({{interval(q("0"), q("2"), true, true), piece_expr::affine(1, 0)}}),
      validation_error);
  // Mobius pole in the interior.
  CHECK_THROWS_AS(
      generator::make({{interval(q("0"), q("1"), true, true), piece_expr::mobius(0, 1, -2, 1)}}),
      validation_error);
}
