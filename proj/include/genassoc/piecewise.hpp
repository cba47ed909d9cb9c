#pragma once

#include <optional>
#include <string>

#include "genassoc/range_set.hpp"
#include "genassoc/rational.hpp"

namespace genassoc {

// One closed-form expression: a constant of [0,inf], an affine map
// a*x + b, or a mobius map (a*x + b)/(c*x + d).  Coefficients are signed
// rationals; values on the piece domain must be non-negative and
// non-decreasing, which make() verifies against the domain.
struct piece_expr {
  enum class kind_t { constant, affine, mobius };

  kind_t kind;
  ext_rat const_value;      // constant
  big_rat a, b, c, d;       // affine: a,b; mobius: all four

  static piece_expr constant(ext_rat v) {
    piece_expr e;
    e.kind = kind_t::constant;
    e.const_value = std::move(v);
    return e;
  }
  static piece_expr affine(big_rat a, big_rat b) {
    piece_expr e;
    e.kind = kind_t::affine;
    e.a = std::move(a);
    e.b = std::move(b);
    return e;
  }
  static piece_expr mobius(big_rat a, big_rat b, big_rat c, big_rat d) {
    piece_expr e;
    e.kind = kind_t::mobius;
    e.a = std::move(a);
    e.b = std::move(b);
    e.c = std::move(c);
    e.d = std::move(d);
    return e;
  }

  // True when the expression takes one value everywhere (constant kind or
  // a degenerate affine).  Degenerate mobius forms are rejected by validate().
  std::optional<ext_rat> constant_value() const {
    if (kind == kind_t::constant) return const_value;
    if (kind == kind_t::affine && a == 0) return ext_rat(b);
    return std::nullopt;
  }

  // Exact value of the continuous extension at x; a mobius pole yields inf.
  ext_rat eval(const big_rat& x) const {
    switch (kind) {
      case kind_t::constant:
        return const_value;
      case kind_t::affine:
        return ext_rat(a * x + b);
      case kind_t::mobius: {
        const big_rat num = a * x + b;
        const big_rat den = c * x + d;
        if (den == 0) {
          if (num <= 0) throw internal_error("mobius 0/0 at x=" + rat_str(x));
          return ext_rat::inf();
        }
        return ext_rat(num / den);
      }
    }
    throw internal_error("unreachable piece kind");
  }

  // Image of the expression over a domain subinterval of [0,1], with exact
  // endpoint closure.  Assumes validate() accepted the pair.
  interval image(const interval& dom) const {
    if (auto cv = constant_value()) return interval::point(*cv);
    const ext_rat lo = eval(dom.lo.value());
    const ext_rat hi = eval(dom.hi.value());
    if (lo == hi) return interval::point(lo);
    return interval(lo, hi, dom.lo_closed, dom.hi_closed);
  }

  // sup{x in dom : eval(x) < y}; nullopt when that set is empty.
  std::optional<big_rat> sup_below(const interval& dom, const ext_rat& y) const {
    const big_rat lo = dom.lo.value();
    const big_rat hi = dom.hi.value();
    if (auto cv = constant_value()) return *cv < y ? std::optional<big_rat>(hi) : std::nullopt;
    if (!(eval(lo) < y)) return std::nullopt;  // increasing: empty above lo
    if (eval(hi) < y) return hi;
    // The threshold where the expression reaches y lies in (lo, hi].
    if (y.is_inf()) return hi;  // only a pole endpoint attains inf
    const big_rat& yv = y.value();
    if (kind == kind_t::affine) return (yv - b) / a;
    const big_rat den = a - c * yv;
    if (den == 0) throw internal_error("mobius threshold with vanishing pivot");
    return (d * yv - b) / den;
  }

  // Solutions of eval(x) = v inside dom, as a subset of [0,1].
  range_set attainment(const interval& dom, const ext_rat& v) const {
    if (auto cv = constant_value())
      return *cv == v ? range_set(dom) : range_set();
    if (v.is_inf()) {
      if (kind == kind_t::mobius && c != 0) {
        const big_rat pole = -d / c;
        if (dom.contains(ext_rat(pole))) return range_set::point(ext_rat(pole));
      }
      return {};
    }
    big_rat x;
    if (kind == kind_t::affine) {
      x = (v.value() - b) / a;
    } else {
      const big_rat den = a - c * v.value();
      if (den == 0) return {};  // v is the horizontal asymptote, never attained
      x = (d * v.value() - b) / den;
    }
    if (x < 0) return {};
    if (dom.contains(ext_rat(x)) && eval(x) == v) return range_set::point(ext_rat(x));
    return {};
  }

  // Checks non-negativity and monotonicity on dom; a mobius pole is only
  // allowed at the right end of the piece, where the value runs to inf.
  void validate(const interval& dom, const std::string& path) const {
    auto fail = [&](const std::string& msg) { throw validation_error(path, msg); };
    switch (kind) {
      case kind_t::constant:
        return;
      case kind_t::affine:
        if (a < 0) fail("affine piece is decreasing");
        if (a * dom.lo.value() + b < 0) fail("affine piece takes a negative value");
        return;
      case kind_t::mobius: {
        const big_rat det = a * d - b * c;
        if (det == 0) fail("degenerate mobius piece; use a constant piece");
        if (det < 0) fail("mobius piece is decreasing");
        if (c != 0) {
          const big_rat pole = -d / c;
          if (pole >= 0) {
            const ext_rat p{pole};
            if (dom.contains(p) && p != dom.hi) fail("mobius pole inside the piece domain");
            if (p == dom.hi && a * pole + b <= 0)
              fail("mobius pole with non-positive numerator");
          }
        }
        const big_rat den_lo = c * dom.lo.value() + d;
        const big_rat num_lo = a * dom.lo.value() + b;
        if (den_lo == 0) fail("mobius pole at the left end of the piece");
        if (den_lo < 0) {
          const big_rat den_hi = c * dom.hi.value() + d;
          if (den_hi >= 0) fail("mobius denominator changes sign on the piece");
        }
        if (num_lo / den_lo < 0) fail("mobius piece takes a negative value");
        return;
      }
    }
  }
};

}  // namespace genassoc
