#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genassoc/piecewise.hpp"
#include "genassoc/range_set.hpp"

namespace genassoc {

struct gen_piece {
  interval domain;  // subinterval of [0,1]
  piece_expr expr;
};

enum class limit_side { left, right };

// A piecewise monotone non-decreasing f : [0,1] -> [0,inf].  The pieces
// are validated once: pairwise disjoint, covering [0,1] exactly, each
// non-negative and non-decreasing, and globally non-decreasing across
// piece boundaries.  All queries are pure.
class generator {
 public:
  static generator make(std::vector<gen_piece> pieces) {
    generator g;
    g.pieces_ = std::move(pieces);
    g.validate();
    g.range_ = g.compute_range();
    return g;
  }

  const std::vector<gen_piece>& pieces() const { return pieces_; }
  const range_set& range() const { return range_; }

  ext_rat eval(const big_rat& x) const {
    if (x < 0 || x > 1) throw std::domain_error("eval outside [0,1]: " + rat_str(x));
    for (const auto& p : pieces_)
      if (p.domain.contains(ext_rat(x))) return p.expr.eval(x);
    throw internal_error("uncovered point " + rat_str(x));
  }

  ext_rat f0() const { return eval(0); }
  ext_rat f1() const { return eval(1); }

  // One-sided limit from the adjacent piece's closed form, with the
  // boundary conventions f(0-) = 0 and f(1+) = inf.
  ext_rat side_limit(const big_rat& x, limit_side side) const {
    if (x < 0 || x > 1) throw std::domain_error("side_limit outside [0,1]");
    if (side == limit_side::left) {
      if (x == 0) return ext_rat(0);
      for (const auto& p : pieces_)
        if (p.domain.lo.value() < x && x <= p.domain.hi.value()) return p.expr.eval(x);
    } else {
      if (x == 1) return ext_rat::inf();
      for (const auto& p : pieces_)
        if (p.domain.lo.value() <= x && x < p.domain.hi.value()) return p.expr.eval(x);
    }
    throw internal_error("side_limit found no adjacent piece at " + rat_str(x));
  }

  // f^(-1)(y) = sup{x : f(x) < y}, with sup(empty) = 0.  Computed
  // symbolically piece by piece.
  big_rat pseudo_inverse(const ext_rat& y) const {
    big_rat best = 0;
    for (const auto& p : pieces_)
      if (auto s = p.expr.sup_below(p.domain, y)) best = std::max(best, *s);
    return best;
  }

  // {x in [0,1] : f(x) = v}, as an exact subset of the unit interval.
  range_set attainment(const ext_rat& v) const {
    range_set acc;
    for (const auto& p : pieces_) acc = acc.union_with(p.expr.attainment(p.domain, v));
    return acc;
  }

  // Values held on a plateau of positive length.
  std::vector<ext_rat> plateau_values() const {
    std::vector<ext_rat> vals;
    for (const auto& p : pieces_) {
      auto cv = p.expr.constant_value();
      if (!cv) continue;
      if (std::find(vals.begin(), vals.end(), *cv) != vals.end()) continue;
      auto att = attainment(*cv);
      auto e = att.extrema();
      if (e.inf != e.sup) vals.push_back(*cv);
    }
    return vals;
  }

  // The least point carrying the same f-value: x itself off plateaus,
  // the plateau's first point otherwise.
  big_rat b_witness(const big_rat& x) const {
    const ext_rat v = eval(x);
    auto att = attainment(v);
    auto e = att.extrema();
    if (e.inf == e.sup) return x;
    return e.inf.value();
  }

  bool in_b(const big_rat& x) const { return b_witness(x) == x; }

  // All piece-boundary x values, sorted, including 0 and 1.
  std::vector<big_rat> breakpoints() const {
    std::vector<big_rat> xs;
    for (const auto& p : pieces_) {
      xs.push_back(p.domain.lo.value());
      xs.push_back(p.domain.hi.value());
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  }

  struct class_f_result {
    bool member = true;
    std::optional<big_rat> witness;
    std::string detail;
  };

  // Membership in the admissible class: at every x in [0,1), either
  // f(x) = f(x+) when f(x+) lies in the range, or f takes the value f(x)
  // nowhere else when f(x+) leaves the range.  Right-discontinuities only
  // occur at breakpoints, so those are the points checked.  The condition
  // at x = 1 involves the f(1+) = inf convention and is vacuous here:
  // strictly monotone and right-continuous generators must qualify.
  class_f_result class_f_membership() const {
    for (const auto& x : breakpoints()) {
      if (x == 1) continue;
      const ext_rat fv = eval(x);
      const ext_rat fr = side_limit(x, limit_side::right);
      if (range_.contains(fr)) {
        if (fv != fr)
          return {false, x,
                  "f(" + rat_str(x) + ")=" + fv.str() + " but f(" + rat_str(x) + "+)=" +
                      fr.str() + " lies in the range"};
      } else {
        auto att = attainment(fv);
        if (!(att == range_set::point(ext_rat(x))))
          return {false, x,
                  "f(" + rat_str(x) + "+)=" + fr.str() + " leaves the range but the value " +
                      fv.str() + " is attained on " + att.str()};
      }
    }
    return {};
  }

 private:
  std::vector<gen_piece> pieces_;
  range_set range_;

  range_set compute_range() const {
    std::vector<interval> imgs;
    imgs.reserve(pieces_.size());
    for (const auto& p : pieces_) imgs.push_back(p.expr.image(p.domain));
    return range_set::of(std::move(imgs));
  }

  void validate() {
    if (pieces_.empty()) throw validation_error("/pieces", "no pieces");
    std::sort(pieces_.begin(), pieces_.end(), [](const gen_piece& a, const gen_piece& b) {
      return a.domain.lo < b.domain.lo ||
             (a.domain.lo == b.domain.lo && a.domain.lo_closed && !b.domain.lo_closed);
    });
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const auto& p = pieces_[i];
      const std::string path = "/pieces/" + std::to_string(i);
      if (p.domain.hi > ext_rat(1)) throw validation_error(path + "/domain", "domain leaves [0,1]");
      p.expr.validate(p.domain, path + "/expr");
    }
    const auto& first = pieces_.front().domain;
    if (!(first.lo == ext_rat(0) && first.lo_closed))
      throw validation_error("/pieces/0/domain", "coverage of [0,1] does not start at 0");
    const auto& last = pieces_.back().domain;
    if (!(last.hi == ext_rat(1) && last.hi_closed))
      throw validation_error("/pieces", "coverage of [0,1] does not end at 1; point 1 uncovered");
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
      const auto& a = pieces_[i].domain;
      const auto& b = pieces_[i + 1].domain;
      const std::string path = "/pieces/" + std::to_string(i + 1) + "/domain";
      if (a.hi != b.lo || a.hi_closed == b.lo_closed) {
        if (a.hi < b.lo || (a.hi == b.lo && !a.hi_closed && !b.lo_closed))
          throw validation_error(path, "gap at " + a.hi.str() + ": point uncovered");
        throw validation_error(path, "pieces overlap near " + b.lo.str());
      }
    }
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
      const interval prev = pieces_[i].expr.image(pieces_[i].domain);
      const interval next = pieces_[i + 1].expr.image(pieces_[i + 1].domain);
      if (next.lo < prev.hi)
        throw validation_error("/pieces/" + std::to_string(i + 1),
                               "piece values decrease across the boundary");
    }
  }
};

}  // namespace genassoc
