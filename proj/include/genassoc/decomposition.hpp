#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "genassoc/generator.hpp"
#include "genassoc/range_set.hpp"

namespace genassoc {

// The pair (S, C) associated with M = Ran(f): the maximal system of
// closed jump intervals [b_k, d_k] of positive length, and the countable
// point set C, with M = C u ([0,inf] \ union of gaps).  Gaps are sorted
// by lower endpoint; index k is the sorted position.
class decomposition {
 public:
  struct gap {
    ext_rat b, d;
    bool operator==(const gap& o) const { return b == o.b && d == o.d; }
  };

  // Builds the pair from the jump structure of g.  Requires class
  // membership unless force is set; a forced decomposition is flagged so
  // reports can carry a validity warning.
  static decomposition of(const generator& g, bool force = false) {
    auto cf = g.class_f_membership();
    if (!cf.member && !force) throw not_in_class_f(rat_str(*cf.witness));

    decomposition d;
    d.m_ = g.range();
    d.f0_ = g.f0();
    d.f1_ = g.f1();
    d.forced_ = !cf.member;

    for (const auto& x : g.breakpoints()) {
      const ext_rat fl = g.side_limit(x, limit_side::left);
      const ext_rat fv = g.eval(x);
      const ext_rat fr = g.side_limit(x, limit_side::right);
      if (fl < fv) d.add_gap(fl, fv);
      if (fv < fr) d.add_gap(fv, fr);
      if (fl < fr) {
        if (d.m_.contains(fr)) d.add_c(fr);   // M1
        if (d.m_.contains(fl)) d.add_c(fl);   // M2
        d.add_c(fv);                          // M3 (minus M1 u M2 is a no-op on a set)
      }
    }
    std::sort(d.gaps_.begin(), d.gaps_.end(),
              [](const gap& a, const gap& b) { return a.b < b.b; });
    std::sort(d.c_points_.begin(), d.c_points_.end());
    d.check_invariants();
    return d;
  }

  const std::vector<gap>& gaps() const { return gaps_; }
  const std::vector<ext_rat>& c_points() const { return c_points_; }
  const range_set& m() const { return m_; }
  const ext_rat& f0() const { return f0_; }
  const ext_rat& f1() const { return f1_; }
  bool forced() const { return forced_; }
  bool reconstruction_ok() const { return reconstruction_ok_; }

  range_set c_set() const {
    range_set s;
    for (const auto& c : c_points_) s = s.union_with(range_set::point(c));
    return s;
  }

  range_set m_minus_c() const { return m_.difference(c_set()); }

  // G_M(x) = max(M n {sup([0,x] n M), inf([x,inf] n M)}), with the
  // sup(empty) = 0 and inf(empty) = inf conventions.
  ext_rat g_m(const ext_rat& x) const {
    const range_set below = m_.intersect(range_set(interval(ext_rat(0), x, true, true)));
    const range_set above = m_.intersect(range_set(interval(x, ext_rat::inf(), true, true)));
    const ext_rat s = below.empty() ? ext_rat(0) : below.extrema().sup;
    const ext_rat i = above.empty() ? ext_rat::inf() : above.extrema().inf;
    std::optional<ext_rat> best;
    if (m_.contains(s)) best = s;
    if (m_.contains(i) && (!best || *best < i)) best = i;
    if (!best) throw internal_error("G_M undefined at " + x.str() + " over " + m_.str());
    return *best;
  }

  // a_k = d_k when d_k lies in M, else b_k; the value the induced
  // operation assigns inside the punctured gap k.
  ext_rat anchor(std::size_t k) const {
    const auto& gp = gaps_.at(k);
    return m_.contains(gp.d) ? gp.d : gp.b;
  }

  // The gap interval as a set, and the punctured gap (its part outside M).
  range_set gap_set(std::size_t k) const {
    const auto& gp = gaps_.at(k);
    return range_set(interval::closed(gp.b, gp.d));
  }
  range_set punctured_gap(std::size_t k) const { return gap_set(k).difference(m_); }

 private:
  std::vector<gap> gaps_;
  std::vector<ext_rat> c_points_;
  range_set m_;
  ext_rat f0_, f1_;
  bool forced_ = false;
  bool reconstruction_ok_ = true;

  void add_gap(const ext_rat& b, const ext_rat& d) {
    gap g{b, d};
    if (std::find(gaps_.begin(), gaps_.end(), g) == gaps_.end()) gaps_.push_back(g);
  }
  void add_c(const ext_rat& c) {
    if (std::find(c_points_.begin(), c_points_.end(), c) == c_points_.end())
      c_points_.push_back(c);
  }

  void check_invariants() {
    range_set gaps_union;
    for (std::size_t k = 0; k < gaps_.size(); ++k) {
      if (!(gaps_[k].b < gaps_[k].d)) throw internal_error("gap of non-positive length");
      gaps_union = gaps_union.union_with(gap_set(k));
    }
    for (std::size_t k = 0; k + 1 < gaps_.size(); ++k)
      if (gaps_[k + 1].b < gaps_[k].d)
        throw internal_error("gaps overlap beyond a shared endpoint");
    if (!forced_) {
      for (std::size_t k = 0; k < gaps_.size(); ++k) {
        const range_set hit = c_set().intersect(gap_set(k));
        const range_set b = range_set::point(gaps_[k].b), d = range_set::point(gaps_[k].d);
        if (hit.empty() || !(hit == b || hit == d || hit == b.union_with(d)))
          throw internal_error("gap " + gap_set(k).str() + " meets C in " + hit.str());
      }
    }
    const range_set rebuilt = c_set().union_with(gaps_union.complement());
    reconstruction_ok_ = rebuilt == m_;
    if (!reconstruction_ok_ && !forced_)
      throw internal_error("reconstruction identity failed: " + rebuilt.str() + " vs " + m_.str());
  }
};

}  // namespace genassoc
