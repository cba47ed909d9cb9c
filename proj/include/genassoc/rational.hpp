#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "genassoc/errors.hpp"

namespace genassoc {

using big_int = boost::multiprecision::cpp_int;
using big_rat = boost::multiprecision::cpp_rational;

// Signed rationals are scratch arithmetic only (piece coefficients,
// x+y-xy intermediates); every value exposed on the [0,inf] carrier
// goes through ext_rat which rejects negatives.

inline std::string rat_str(const big_rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::optional<big_rat> rat_parse(std::string_view text) {
  auto parse_int = [](std::string_view s, big_int& out) -> bool {
    if (s.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) return false;
    big_int v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
      v = v * 10 + (s[i] - '0');
    }
    out = neg ? -v : v;
    return true;
  };
  const auto slash = text.find('/');
  big_int num, den = 1;
  if (!parse_int(slash == std::string_view::npos ? text : text.substr(0, slash), num))
    return std::nullopt;
  if (slash != std::string_view::npos) {
    if (!parse_int(text.substr(slash + 1), den) || den == 0) return std::nullopt;
  }
  return big_rat(num, den);
}

// A point of [0, inf]: a non-negative rational or the infinity point.
class ext_rat {
 public:
  ext_rat() : v_(0), finite_(true) {}
  ext_rat(int n) : v_(n), finite_(true) {
    if (n < 0) throw std::domain_error("negative value on [0,inf] carrier");
  }
  ext_rat(int n, int d) : ext_rat(big_rat(n, d)) {}
  explicit ext_rat(big_rat q) : v_(std::move(q)), finite_(true) {
    if (v_ < 0) throw std::domain_error("negative value on [0,inf] carrier: " + rat_str(v_));
  }

  static ext_rat inf() {
    ext_rat r;
    r.finite_ = false;
    return r;
  }

  // Text form: "p/q" (lowest terms not required), "p", or "inf".
  static std::optional<ext_rat> parse(std::string_view text) {
    if (text == "inf") return inf();
    auto q = rat_parse(text);
    if (!q || *q < 0) return std::nullopt;
    return ext_rat(std::move(*q));
  }

  bool is_finite() const { return finite_; }
  bool is_inf() const { return !finite_; }
  bool is_zero() const { return finite_ && v_ == 0; }

  const big_rat& value() const {
    if (!finite_) throw internal_error("value() on infinity");
    return v_;
  }

  friend ext_rat operator+(const ext_rat& a, const ext_rat& b) {
    if (a.is_inf() || b.is_inf()) return inf();
    return ext_rat(a.v_ + b.v_);
  }

  friend ext_rat operator*(const ext_rat& a, const ext_rat& b) {
    if (a.is_inf() || b.is_inf()) {
      if (a.is_zero() || b.is_zero()) throw indeterminate_product();
      return inf();
    }
    return ext_rat(a.v_ * b.v_);
  }

  friend std::strong_ordering operator<=>(const ext_rat& a, const ext_rat& b) {
    if (a.finite_ != b.finite_)
      return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const ext_rat& a, const ext_rat& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  std::string str() const { return finite_ ? rat_str(v_) : "inf"; }

  friend std::ostream& operator<<(std::ostream& os, const ext_rat& x) { return os << x.str(); }

 private:
  big_rat v_;
  bool finite_;
};

inline const ext_rat& min(const ext_rat& a, const ext_rat& b) { return b < a ? b : a; }
inline const ext_rat& max(const ext_rat& a, const ext_rat& b) { return a < b ? b : a; }

// Midpoint of two finite points; used for exact interior sampling.
inline ext_rat midpoint(const ext_rat& a, const ext_rat& b) {
  if (a.is_inf() || b.is_inf()) throw internal_error("midpoint with infinite endpoint");
  return ext_rat((a.value() + b.value()) / 2);
}

}  // namespace genassoc
