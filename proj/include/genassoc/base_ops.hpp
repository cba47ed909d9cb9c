#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genassoc/range_set.hpp"

namespace genassoc {

// A base operation F on [0,inf] with declared algebraic properties and
// exact set-level computation.  Only parameterized built-ins exist; the
// closed forms are what make images and section preimages exact.
class assoc_op {
 public:
  enum class family { sum, product, scaled_product, shifted_sum, max_op, min_op, prob_sum };

  static assoc_op make(const std::string& name,
                       std::optional<big_rat> param = std::nullopt) {
    assoc_op op;
    if (name == "sum") {
      op.fam_ = family::sum;
      op.cancellative_ = true;
      op.neutral_ = ext_rat(0);
    } else if (name == "product") {
      op.fam_ = family::product;
      op.cancellative_ = true;
      op.neutral_ = ext_rat(1);
    } else if (name == "scaled_product") {
      if (!param || *param <= 0) throw validation_error("/F/alpha", "alpha must be positive");
      op.fam_ = family::scaled_product;
      op.param_ = *param;
      op.cancellative_ = true;
      op.neutral_ = ext_rat(1 / *param);
    } else if (name == "shifted_sum") {
      if (!param || *param < 0) throw validation_error("/F/beta", "beta must be non-negative");
      op.fam_ = family::shifted_sum;
      op.param_ = *param;
      op.cancellative_ = true;
      if (*param == 0) op.neutral_ = ext_rat(0);
    } else if (name == "max") {
      op.fam_ = family::max_op;
      op.neutral_ = ext_rat(0);
    } else if (name == "min") {
      op.fam_ = family::min_op;
      op.neutral_ = ext_rat::inf();
    } else if (name == "prob_sum") {
      op.fam_ = family::prob_sum;
      op.neutral_ = ext_rat(0);
    } else {
      throw validation_error("/F/name", "unknown operation '" + name + "'");
    }
    op.name_ = name;
    op.spot_verify();
    return op;
  }

  const std::string& name() const { return name_; }
  family fam() const { return fam_; }
  const big_rat& param() const { return param_; }
  bool commutative() const { return true; }
  bool cancellative() const { return cancellative_; }
  const std::optional<ext_rat>& neutral() const { return neutral_; }

  // Valid domain is a square: [0,1]^2 for prob_sum (beyond it the section
  // monotonicity reverses), [0,inf]^2 otherwise, minus the indeterminate
  // 0*inf pairs for the product family.
  interval domain_side() const {
    if (fam_ == family::prob_sum) return interval::closed(ext_rat(0), ext_rat(1));
    return interval::whole();
  }

  bool pair_valid(const ext_rat& x, const ext_rat& y) const {
    if (!domain_side().contains(x) || !domain_side().contains(y)) return false;
    if (fam_ == family::product || fam_ == family::scaled_product)
      if ((x.is_zero() && y.is_inf()) || (x.is_inf() && y.is_zero())) return false;
    return true;
  }

  bool sets_valid(const range_set& a, const range_set& b) const {
    for (const auto* s : {&a, &b})
      for (const auto& c : s->components())
        if (!domain_side().contains(c.lo) || !domain_side().contains(c.hi)) return false;
    if (fam_ == family::product || fam_ == family::scaled_product) {
      const ext_rat zero(0), infty = ext_rat::inf();
      if (a.contains(zero) && b.contains(infty)) return false;
      if (a.contains(infty) && b.contains(zero)) return false;
    }
    return true;
  }

  bool square_valid(const range_set& m) const { return sets_valid(m, m); }

  ext_rat eval(const ext_rat& x, const ext_rat& y) const {
    if (!pair_valid(x, y))
      throw outside_valid_domain(name_ + "(" + x.str() + "," + y.str() + ")");
    switch (fam_) {
      case family::sum:
        return x + y;
      case family::product:
        return x * y;
      case family::scaled_product:
        return scale(x * y);
      case family::shifted_sum:
        return x + y + ext_rat(param_);
      case family::max_op:
        return max(x, y);
      case family::min_op:
        return min(x, y);
      case family::prob_sum:
        return ext_rat(x.value() + y.value() - x.value() * y.value());
    }
    throw internal_error("unreachable op family");
  }

  // Exact image of a component rectangle.  The corner values bound the
  // image because every family is monotone and continuous per variable on
  // its valid domain; attainment needs per-family care where a section is
  // constant (absorbing elements, max/min thresholds).
  interval rect_image(const interval& a, const interval& b) const {
    switch (fam_) {
      case family::sum:
        return sum_rect(a, b);
      case family::shifted_sum: {
        interval s = sum_rect(a, b);
        return interval(s.lo + ext_rat(param_), s.hi + ext_rat(param_), s.lo_closed,
                        s.hi_closed);
      }
      case family::product:
        return prod_rect(a, b);
      case family::scaled_product: {
        interval p = prod_rect(a, b);
        return interval(scale(p.lo), scale(p.hi), p.lo_closed, p.hi_closed);
      }
      case family::max_op: {
        const ext_rat lo = max(a.lo, b.lo), hi = max(a.hi, b.hi);
        const bool lo_att = (lo == a.lo && a.lo_closed && at_most(b, lo)) ||
                            (lo == b.lo && b.lo_closed && at_most(a, lo));
        const bool hi_att =
            (hi == a.hi && a.hi_closed) || (hi == b.hi && b.hi_closed);
        return make_iv(lo, hi, lo_att, hi_att);
      }
      case family::min_op: {
        const ext_rat lo = min(a.lo, b.lo), hi = min(a.hi, b.hi);
        const bool lo_att =
            (lo == a.lo && a.lo_closed) || (lo == b.lo && b.lo_closed);
        const bool hi_att = (hi == a.hi && a.hi_closed && at_least(b, hi)) ||
                            (hi == b.hi && b.hi_closed && at_least(a, hi));
        return make_iv(lo, hi, lo_att, hi_att);
      }
      case family::prob_sum: {
        const ext_rat lo = eval(a.lo, b.lo), hi = eval(a.hi, b.hi);
        const bool one_in = (a.hi == ext_rat(1) && a.hi_closed) ||
                            (b.hi == ext_rat(1) && b.hi_closed);
        const bool lo_att = a.lo_closed && b.lo_closed;
        const bool hi_att = (a.hi_closed && b.hi_closed) || (hi == ext_rat(1) && one_in);
        return make_iv(lo, hi, lo_att, hi_att);
      }
    }
    throw internal_error("unreachable op family");
  }

  // F(A, B) = {F(x,y) : x in A, y in B}; empty operands give the empty set.
  range_set image(const range_set& a, const range_set& b) const {
    if (a.empty() || b.empty()) return {};
    if (!sets_valid(a, b))
      throw outside_valid_domain(name_ + " image outside the valid domain");
    std::vector<interval> out;
    for (const auto& ca : a.components())
      for (const auto& cb : b.components()) out.push_back(rect_image(ca, cb));
    return range_set::of(std::move(out));
  }

  // {x : F(x,y) in target} (side left) or {x : F(y,x) in target} (side
  // right).  All families are commutative, so the sides coincide; constant
  // sections resolve to all-or-nothing by membership of the constant value.
  range_set section_preimage(const ext_rat& y, const range_set& target) const {
    if (!domain_side().contains(y))
      throw outside_valid_domain(name_ + " section at " + y.str());
    range_set out;
    for (const auto& comp : target.components())
      out = out.union_with(section_component_preimage(y, comp));
    return out.intersect(range_set(domain_side()));
  }

  // Partners x2 that separate some u in s from a, i.e. F(u,x2) != F(a,x2)
  // for at least one u.  Used to decide emptiness of the H-sets exactly.
  range_set separating_partners(const range_set& s, const ext_rat& a) const {
    const range_set su = s.difference(range_set::point(a));
    if (su.empty()) return {};
    switch (fam_) {
      case family::sum:
      case family::shifted_sum:
        return range_set(interval(ext_rat(0), ext_rat::inf(), true, false));
      case family::product:
      case family::scaled_product:
        return range_set(interval(ext_rat(0), ext_rat::inf(), false, false));
      case family::prob_sum:
        return range_set(interval(ext_rat(0), ext_rat(1), true, false));
      case family::max_op: {
        // u above a separates partners below u; u below a separates
        // partners below a (there max(u,x2) < a = max(a,x2)).
        range_set d;
        if (a < ext_rat::inf()) {
          const range_set above =
              su.intersect(range_set(interval(a, ext_rat::inf(), false, true)));
          if (!above.empty()) {
            const ext_rat s_hi = above.extrema().sup;
            d = d.union_with(range_set(interval(ext_rat(0), s_hi, true, false)));
          }
        }
        if (ext_rat(0) < a &&
            !su.intersect(range_set(interval(ext_rat(0), a, true, false))).empty())
          d = d.union_with(range_set(interval(ext_rat(0), a, true, false)));
        return d;
      }
      case family::min_op: {
        range_set d;
        if (ext_rat(0) < a) {
          const range_set below =
              su.intersect(range_set(interval(ext_rat(0), a, true, false)));
          if (!below.empty()) {
            const ext_rat s_lo = below.extrema().inf;
            d = d.union_with(range_set(interval(s_lo, ext_rat::inf(), false, true)));
          }
        }
        if (a < ext_rat::inf() &&
            !su.intersect(range_set(interval(a, ext_rat::inf(), false, true))).empty())
          d = d.union_with(range_set(interval(a, ext_rat::inf(), false, true)));
        return d;
      }
    }
    throw internal_error("unreachable op family");
  }

 private:
  family fam_ = family::sum;
  std::string name_;
  big_rat param_ = 0;
  bool cancellative_ = false;
  std::optional<ext_rat> neutral_;

  ext_rat scale(const ext_rat& v) const {
    return v.is_inf() ? ext_rat::inf() : ext_rat(v.value() * param_);
  }

  static interval make_iv(const ext_rat& lo, const ext_rat& hi, bool lo_att, bool hi_att) {
    if (lo == hi) {
      if (!lo_att && !hi_att) throw internal_error("degenerate unattained image");
      return interval::point(lo);
    }
    return interval(lo, hi, lo_att, hi_att);
  }

  // Does iv contain a point <= v (resp. >= v)?
  static bool at_most(const interval& iv, const ext_rat& v) {
    return iv.lo < v || (iv.lo == v && iv.lo_closed);
  }
  static bool at_least(const interval& iv, const ext_rat& v) {
    return v < iv.hi || (v == iv.hi && iv.hi_closed);
  }

  static interval sum_rect(const interval& a, const interval& b) {
    const ext_rat lo = a.lo + b.lo, hi = a.hi + b.hi;
    const bool inf_in = (a.hi.is_inf() && a.hi_closed) || (b.hi.is_inf() && b.hi_closed);
    const bool lo_att = a.lo_closed && b.lo_closed;
    const bool hi_att = (a.hi_closed && b.hi_closed) || (hi.is_inf() && inf_in);
    return make_iv(lo, hi, lo_att, hi_att);
  }

  interval prod_rect(const interval& a, const interval& b) const {
    const bool zero_in = (a.lo.is_zero() && a.lo_closed) || (b.lo.is_zero() && b.lo_closed);
    const bool inf_in = (a.hi.is_inf() && a.hi_closed) || (b.hi.is_inf() && b.hi_closed);
    const ext_rat lo = corner_prod(a.lo, b.lo);
    const ext_rat hi = corner_prod(a.hi, b.hi);
    const bool lo_att =
        (a.lo_closed && b.lo_closed) || (lo.is_zero() && zero_in) || (lo.is_inf() && inf_in);
    const bool hi_att =
        (a.hi_closed && b.hi_closed) || (hi.is_zero() && zero_in) || (hi.is_inf() && inf_in);
    return make_iv(lo, hi, lo_att, hi_att);
  }

  // Corner product for a valid rectangle; 0 dominates inf at the low
  // corner (the witness partner is some finite element of the other side).
  static ext_rat corner_prod(const ext_rat& x, const ext_rat& y) {
    if (x.is_zero() || y.is_zero()) return ext_rat(0);
    return x * y;
  }

  range_set section_component_preimage(const ext_rat& y, const interval& comp) const {
    const auto whole_or_empty = [&](const ext_rat& constant) -> range_set {
      return comp.contains(constant) ? range_set(domain_side()) : range_set();
    };
    switch (fam_) {
      case family::sum:
        return offset_preimage(y, comp);
      case family::shifted_sum:
        return y.is_inf() ? whole_or_empty(ext_rat::inf())
                          : offset_preimage(y + ext_rat(param_), comp);
      case family::product:
        return product_preimage(y, comp);
      case family::scaled_product: {
        // alpha*x*y in comp  <=>  x*y in comp/alpha
        auto div = [&](const ext_rat& v) {
          return v.is_inf() ? ext_rat::inf() : ext_rat(v.value() / param_);
        };
        if (comp.is_point()) return product_preimage(y, interval::point(div(comp.lo)));
        return product_preimage(
            y, interval(div(comp.lo), div(comp.hi), comp.lo_closed, comp.hi_closed));
      }
      case family::max_op: {
        range_set out = comp.contains(y)
                            ? range_set(interval(ext_rat(0), y, true, true))
                            : range_set();
        if (y.is_inf()) return out;  // max(x, inf) is constant
        const range_set above(interval(y, ext_rat::inf(), false, true));
        return out.union_with(above.intersect(range_set(comp)));
      }
      case family::min_op: {
        range_set out = comp.contains(y)
                            ? range_set(interval(y, ext_rat::inf(), true, true))
                            : range_set();
        if (y.is_zero()) return out;
        const range_set below(interval(ext_rat(0), y, true, false));
        return out.union_with(below.intersect(range_set(comp)));
      }
      case family::prob_sum: {
        if (y == ext_rat(1)) return whole_or_empty(ext_rat(1));
        // Reachable values lie in [0,1]; clip, then invert the affine
        // section x(1-y) + y exactly.
        const range_set clipped =
            range_set(comp).intersect(range_set(interval::closed(ext_rat(0), ext_rat(1))));
        const big_rat yy = y.value();
        range_set out;
        for (const auto& cc : clipped.components()) {
          const big_rat lo = (cc.lo.value() - yy) / (1 - yy);
          const big_rat hi = (cc.hi.value() - yy) / (1 - yy);
          const big_rat l = std::max(big_rat(0), lo);
          const bool lc = lo >= 0 ? cc.lo_closed : true;
          if (hi < 0 || hi < l) continue;
          if (hi == l) {
            if (lc && cc.hi_closed) out = out.union_with(range_set::point(ext_rat(l)));
            continue;
          }
          out = out.union_with(range_set(interval(ext_rat(l), ext_rat(hi), lc, cc.hi_closed)));
        }
        return out;
      }
    }
    throw internal_error("unreachable op family");
  }

  // {x : x + y in comp} for finite or infinite offset y.
  static range_set offset_preimage(const ext_rat& y, const interval& comp) {
    if (y.is_inf()) return comp.contains(ext_rat::inf()) ? range_set::whole() : range_set();
    if (comp.lo.is_inf()) {
      // comp = {inf}; only x = inf maps there.
      return range_set::point(ext_rat::inf());
    }
    const big_rat yy = y.value();
    // Upper endpoint: x = inf reaches inf, finite x shift down by y.
    ext_rat hi = ext_rat::inf();
    bool hi_closed = comp.hi_closed;
    if (!comp.hi.is_inf()) {
      if (comp.hi.value() < yy) return {};
      hi = ext_rat(comp.hi.value() - yy);
    }
    ext_rat lo(0);
    bool lo_closed = true;
    if (comp.lo.value() > yy) {
      lo = ext_rat(comp.lo.value() - yy);
      lo_closed = comp.lo_closed;
    } else if (comp.lo.value() == yy) {
      lo_closed = comp.lo_closed;
    }
    if (hi < lo || (hi == lo && !(lo_closed && hi_closed))) return {};
    if (hi == lo) return range_set::point(lo);
    return range_set(interval(lo, hi, lo_closed, hi_closed));
  }

  // {x : x * y in comp}.
  static range_set product_preimage(const ext_rat& y, const interval& comp) {
    if (y.is_zero()) return comp.contains(ext_rat(0)) ? range_set::whole() : range_set();
    if (y.is_inf()) {
      // F(x, inf) = inf for x > 0; x = 0 is outside the valid domain.
      return comp.contains(ext_rat::inf())
                 ? range_set(interval(ext_rat(0), ext_rat::inf(), false, true))
                 : range_set();
    }
    const big_rat yy = y.value();
    auto div = [&](const ext_rat& v) { return v.is_inf() ? ext_rat::inf() : ext_rat(v.value() / yy); };
    ext_rat lo = div(comp.lo), hi = div(comp.hi);
    bool lo_closed = comp.lo_closed, hi_closed = comp.hi_closed;
    if (lo == hi) return lo_closed && hi_closed ? range_set::point(lo) : range_set();
    return range_set(interval(lo, hi, lo_closed, hi_closed));
  }

  // Associativity, commutativity and per-variable monotonicity are
  // trusted but spot-verified on a small witness grid at registration.
  void spot_verify() const {
    std::vector<ext_rat> pts;
    if (fam_ == family::prob_sum) {
      pts = {ext_rat(0), ext_rat(1, 5), ext_rat(2, 5), ext_rat(1, 2),
             ext_rat(3, 5), ext_rat(4, 5), ext_rat(1)};
    } else {
      pts = {ext_rat(0),  ext_rat(1, 5), ext_rat(1, 2), ext_rat(1),
             ext_rat(2),  ext_rat(10),   ext_rat::inf()};
    }
    auto ok = [&](const ext_rat& x, const ext_rat& y) { return pair_valid(x, y); };
    for (const auto& x : pts)
      for (const auto& y : pts) {
        if (!ok(x, y)) continue;
        if (eval(x, y) != eval(y, x))
          throw internal_error(name_ + " failed the commutativity spot check");
        for (const auto& z : pts) {
          if (!ok(y, z) || !ok(x, z)) continue;
          const ext_rat xy = eval(x, y), yz = eval(y, z);
          if (!ok(xy, z) || !ok(x, yz)) continue;
          if (eval(xy, z) != eval(x, yz))
            throw internal_error(name_ + " failed the associativity spot check");
        }
      }
    for (const auto& x : pts)
      for (const auto& u : pts)
        for (const auto& v : pts) {
          if (!(u < v) || !ok(x, u) || !ok(x, v)) continue;
          if (eval(x, v) < eval(x, u))
            throw internal_error(name_ + " failed the monotonicity spot check");
        }
  }
};

}  // namespace genassoc
