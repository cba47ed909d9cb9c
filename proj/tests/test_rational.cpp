#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace genassoc;

TEST_CASE("ext_rat parsing and canonical text") {
  CHECK(q("2/4").str() == "1/2");
  CHECK(q("7").str() == "7");
  CHECK(q("inf").str() == "inf");
  CHECK(q("0/5").str() == "0");
  CHECK(!ext_rat::parse("-1/2"));
  CHECK(!ext_rat::parse("1/0"));
  CHECK(!ext_rat::parse("a"));
  CHECK(!ext_rat::parse(""));
  // Re-parsing a canonical form is the identity.
  for (const char* s : {"5/6", "7", "inf", "0"}) CHECK(q(s).str() == s);
}

TEST_CASE("ext_rat addition") {
  CHECK(q("1/2") + q("1/3") == q("5/6"));
  CHECK(ext_rat::inf() + q("7") == ext_rat::inf());
  CHECK(q("0") + q("3/7") == q("3/7"));
}

TEST_CASE("ext_rat multiplication") {
  CHECK(q("1/2") * q("1/2") == q("1/4"));
  CHECK(ext_rat::inf() * q("3") == ext_rat::inf());
  CHECK_THROWS_AS(q("0") * ext_rat::inf(), indeterminate_product);
  CHECK_THROWS_AS(ext_rat::inf() * q("0"), indeterminate_product);
}

TEST_CASE("ext_rat order") {
  CHECK(q("2/4") == q("1/2"));
  CHECK(q("1000000") < ext_rat::inf());
  CHECK(q("9") < q("10"));
  CHECK(ext_rat::inf() == ext_rat::inf());
  CHECK(!(ext_rat::inf() < ext_rat::inf()));
}

TEST_CASE("ext_rat algebra on a finite sample") {
  const std::vector<ext_rat> pts = {q("0"), q("1/3"), q("1/2"), q("1"),
                                    q("7/5"), q("12"), ext_rat::inf()};
  for (const auto& a : pts)
    for (const auto& b : pts) {
      CHECK(a + b == b + a);
      if (!a.is_zero() && !b.is_zero()) CHECK(a * b == b * a);
      for (const auto& c : pts) {
        CHECK((a + b) + c == a + (b + c));
        if (!a.is_zero() && !b.is_zero() && !c.is_zero())
          CHECK((a * b) * c == a * (b * c));
      }
    }
  // Monotonicity of + and of * restricted to positives.
  for (const auto& a : pts)
    for (const auto& b : pts)
      for (const auto& c : pts) {
        if (!(b < c)) continue;
        CHECK(!(a + c < a + b));
        if (!a.is_zero() && !b.is_zero()) CHECK(!(a * c < a * b));
      }
}

TEST_CASE("negative values cannot reach the carrier") {
  CHECK_THROWS_AS(ext_rat(big_rat(-1, 2)), std::domain_error);
}
