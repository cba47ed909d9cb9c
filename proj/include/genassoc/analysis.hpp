#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genassoc/base_ops.hpp"
#include "genassoc/decomposition.hpp"
#include "genassoc/generator.hpp"

namespace genassoc {

struct witness_config {
  unsigned grid_denominator = 16;
  std::vector<ext_rat> extra_points;
};

enum class outcome {
  associative,
  not_associative,
  condition_holds,
  condition_fails,
  not_applicable,
  inconclusive,
};

inline const char* outcome_name(outcome o) {
  switch (o) {
    case outcome::associative: return "associative";
    case outcome::not_associative: return "not_associative";
    case outcome::condition_holds: return "condition_holds";
    case outcome::condition_fails: return "condition_fails";
    case outcome::not_applicable: return "not_applicable";
    case outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

struct verdict {
  outcome out;
  std::string criterion;  // which rule or oracle produced it
  std::optional<std::string> witness;
  std::optional<std::string> caveat;
  std::optional<std::string> failed_hypothesis;
  std::vector<std::pair<std::string, std::string>> data;  // named exact sets/counters
};

// A generator paired with a base operation, plus the derived range
// decomposition.  Construction validates that M x M lies inside the
// operation's valid domain.
class scenario {
 public:
  static scenario make(generator g, assoc_op op, bool force = false) {
    scenario s(std::move(g), std::move(op), force);
    if (!s.op_.square_valid(s.dec_.m()))
      throw validation_error("/F", "M x M leaves the valid domain of " + s.op_.name());
    return s;
  }

  const generator& gen() const { return gen_; }
  const assoc_op& op() const { return op_; }
  const decomposition& dec() const { return dec_; }
  bool forced() const { return dec_.forced(); }

  // x (x) y = G_M(F(x,y)), defined on M.
  ext_rat otimes(const ext_rat& x, const ext_rat& y) const {
    if (!dec_.m().contains(x)) throw not_in_m(x.str());
    if (!dec_.m().contains(y)) throw not_in_m(y.str());
    return dec_.g_m(op_.eval(x, y));
  }

  // T(x,y) = f^(-1)(F(f(x), f(y))).
  big_rat t_eval(const big_rat& x, const big_rat& y) const {
    return gen_.pseudo_inverse(op_.eval(gen_.eval(x), gen_.eval(y)));
  }

  // The boundary-repaired variant: T on [0,1)^2, min{x,y} when an
  // argument is 1.
  big_rat t_modified(const big_rat& x, const big_rat& y) const {
    if (x == 1 || y == 1) return std::min(x, y);
    return t_eval(x, y);
  }

  // I_k = O({a_k} u (F(M,M) n punctured gap k)).
  range_set i_k(std::size_t k) const {
    const range_set hits = f_mm().intersect(dec_.punctured_gap(k));
    return range_set::point(dec_.anchor(k)).union_with(hits).o_span();
  }

  range_set i_union() const {
    range_set u;
    for (std::size_t k = 0; k < dec_.gaps().size(); ++k) u = u.union_with(i_k(k));
    return u;
  }

  const range_set& f_mm() const {
    if (!f_mm_) f_mm_ = op_.image(dec_.m(), dec_.m());
    return *f_mm_;
  }

  bool single_point_range() const {
    auto e = dec_.m().extrema();
    return e.inf == e.sup;
  }

 private:
  scenario(generator g, assoc_op op, bool force)
      : gen_(std::move(g)), op_(std::move(op)), dec_(decomposition::of(gen_, force)) {}

  generator gen_;
  assoc_op op_;
  decomposition dec_;
  mutable std::optional<range_set> f_mm_;
};

// Finite instantiation of the quantifier over y in M: gap endpoints,
// C, anchors, component endpoints, component midpoints, extras; all
// filtered to members of M.
inline std::vector<ext_rat> y_witnesses(const scenario& s, const witness_config& w) {
  std::vector<ext_rat> pts;
  const auto& dec = s.dec();
  for (std::size_t k = 0; k < dec.gaps().size(); ++k) {
    pts.push_back(dec.gaps()[k].b);
    pts.push_back(dec.gaps()[k].d);
    pts.push_back(dec.anchor(k));
  }
  for (const auto& c : dec.c_points()) pts.push_back(c);
  for (const auto& comp : dec.m().components()) {
    pts.push_back(comp.lo);
    pts.push_back(comp.hi);
    if (!comp.is_point())
      pts.push_back(comp.hi.is_inf() ? comp.lo + ext_rat(1) : midpoint(comp.lo, comp.hi));
  }
  for (const auto& e : w.extra_points) pts.push_back(e);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<ext_rat> out;
  for (auto& p : pts)
    if (dec.m().contains(p)) out.push_back(p);
  return out;
}

// The per-y section sets of the necessity machinery, all computed
// exactly from section preimages and images.
struct fcondition_sets_t {
  range_set m_k_y, m_y_k;   // preimages of the punctured gaps k (left/right slot)
  range_set m_up_y, m_down_y;  // preimages of M \ C (left/right slot)
  range_set i_k_y, i_y_k;
  range_set j_k_l_y;
  bool h_k_y_empty = true, h_y_k_empty = true, h_k_l_y_empty = true;
};

inline fcondition_sets_t fcondition_sets(const scenario& s, const ext_rat& y, std::size_t k,
                                         std::size_t l) {
  const auto& dec = s.dec();
  const auto& op = s.op();
  const range_set m = dec.m();
  const range_set mc = dec.m_minus_c();
  fcondition_sets_t r;
  r.m_k_y = op.section_preimage(y, dec.punctured_gap(k)).intersect(m);
  r.m_y_k = r.m_k_y;  // registered operations are commutative
  r.m_up_y = op.section_preimage(y, mc).intersect(m);
  r.m_down_y = r.m_up_y;
  const ext_rat a_k = dec.anchor(k), a_l = dec.anchor(l);
  const range_set f_mky_y = op.image(r.m_k_y, range_set::point(y));
  const range_set f_y_myk = op.image(range_set::point(y), r.m_y_k);
  r.i_k_y = range_set::point(a_k).union_with(f_mky_y).o_span();
  r.i_y_k = range_set::point(a_k).union_with(f_y_myk).o_span();
  const range_set m_l_y = op.section_preimage(y, dec.punctured_gap(l)).intersect(m);
  if (!r.m_k_y.empty() && !m_l_y.empty()) {
    r.j_k_l_y = op.image(r.m_k_y, range_set::point(a_l))
                    .union_with(op.image(range_set::point(a_k), m_l_y))
                    .o_span();
  }
  // H-set emptiness, decided by exact section comparison: a pair lands in
  // H_k^y iff some partner x2 separates some u = F(x1,y) from a_k.
  if (!r.m_k_y.empty() && !r.m_down_y.empty())
    r.h_k_y_empty = op.separating_partners(f_mky_y, a_k).intersect(r.m_down_y).empty();
  if (!r.m_y_k.empty() && !r.m_up_y.empty())
    r.h_y_k_empty = op.separating_partners(f_y_myk, a_k).intersect(r.m_up_y).empty();
  if (!r.m_k_y.empty() && !m_l_y.empty()) {
    const range_set va = op.image(range_set::point(a_k), m_l_y);
    const range_set vb = op.image(r.m_k_y, range_set::point(a_l));
    const bool both_constant = va.components().size() == 1 && va.components()[0].is_point() &&
                               vb.components().size() == 1 && vb.components()[0].is_point() &&
                               va == vb;
    r.h_k_l_y_empty = both_constant;
  }
  return r;
}

// J(M): the union of base-operation images of the span sets.  The two
// one-sided parts are y-free once the spans are collected into union(I_k),
// since images distribute over unions; the J_{k,l}^y part is accumulated
// over the finite witness set.
inline range_set jfrak(const scenario& s, const witness_config& w) {
  const range_set iu = s.i_union();
  const range_set mc = s.dec().m_minus_c();
  range_set acc = s.op().image(iu, mc).union_with(s.op().image(mc, iu));
  const std::size_t n_gaps = s.dec().gaps().size();
  for (const auto& y : y_witnesses(s, w))
    for (std::size_t k = 0; k < n_gaps; ++k)
      for (std::size_t l = 0; l < n_gaps; ++l)
        acc = acc.union_with(fcondition_sets(s, y, k, l).j_k_l_y);
  return acc;
}

// Sufficient/necessary test through the span intersections:
// F(U I_k, M) n M = F(M, U I_k) n M = empty is sufficient for
// associativity; under cancellativity plus F(M, M\C) in M\C it is
// equivalent.
inline verdict check_sufficient(const scenario& s) {
  if (s.single_point_range())
    return {outcome::associative, "sufficient", std::nullopt,
            "single-point range: the induced operation is trivial", std::nullopt, {}};
  const range_set m = s.dec().m();
  const range_set iu = s.i_union();
  const range_set left = s.op().image(iu, m).intersect(m);
  const range_set right = s.op().image(m, iu).intersect(m);
  const range_set fmc = s.op().image(m, s.dec().m_minus_c());
  const bool closure_ok = fmc.subset_of(s.dec().m_minus_c());
  verdict v;
  v.criterion = "sufficient";
  v.data.emplace_back("I_union", iu.str());
  v.data.emplace_back("F(I,M) n M", left.str());
  v.data.emplace_back("F(M,I) n M", right.str());
  v.data.emplace_back("cancellative", s.op().cancellative() ? "true" : "false");
  v.data.emplace_back("F(M,M\\C)", fmc.str());
  v.data.emplace_back("F(M,M\\C) subset of M\\C", closure_ok ? "true" : "false");
  if (left.empty() && right.empty()) {
    v.out = outcome::associative;
    return v;
  }
  const range_set& hit = left.empty() ? right : left;
  if (s.op().cancellative() && closure_ok) {
    v.out = outcome::not_associative;
    v.criterion = "sufficient+converse";
    v.witness = hit.extrema().inf.str();
    return v;
  }
  v.out = outcome::inconclusive;
  v.failed_hypothesis = !s.op().cancellative()
                            ? "cancellative"
                            : "F(M,M\\C) subset of M\\C";
  if (!s.op().cancellative() && !closure_ok)
    v.failed_hypothesis = "cancellative; F(M,M\\C) subset of M\\C";
  v.caveat = "sufficiency failed and the converse hypothesis is unavailable";
  return v;
}

// The F-condition checker.  Hypothesis: F(C,M) u F(M,C) in M\C.  For a
// cancellative operation the H-sets are populated whenever their factors
// are, so the condition reduces to J(M) n (M\C) = empty; otherwise the
// three conditions are evaluated per witness y and gap pair.
inline verdict check_fcondition(const scenario& s, const witness_config& w) {
  if (s.single_point_range())
    return {outcome::associative, "fcondition", std::nullopt,
            "single-point range: the induced operation is trivial", std::nullopt, {}};
  const auto& dec = s.dec();
  const auto& op = s.op();
  const range_set m = dec.m();
  const range_set mc = dec.m_minus_c();
  const range_set c = dec.c_set();
  verdict v;
  v.criterion = "fcondition";
  const range_set fcm = c.empty() ? range_set() : op.image(c, m).union_with(op.image(m, c));
  v.data.emplace_back("F(C,M) u F(M,C)", fcm.str());
  if (!fcm.subset_of(mc)) {
    v.out = outcome::not_applicable;
    v.failed_hypothesis = "F(C,M) u F(M,C) subset of M\\C";
    return v;
  }
  if (op.cancellative()) {
    const range_set jf = jfrak(s, w);
    const range_set bad = jf.intersect(mc);
    v.data.emplace_back("J(M)", jf.str());
    v.data.emplace_back("J(M) n (M\\C)", bad.str());
    if (!bad.empty()) {
      v.out = outcome::not_associative;
      v.criterion = "fcondition+cancellative";
      v.witness = bad.extrema().inf.str();
      return v;
    }
    v.out = outcome::condition_holds;
    v.caveat = "witness-set verification, not a proof";
    return v;
  }
  const auto ys = y_witnesses(s, w);
  const std::size_t n_gaps = dec.gaps().size();
  for (const auto& y : ys)
    for (std::size_t k = 0; k < n_gaps; ++k) {
      for (std::size_t l = 0; l < n_gaps; ++l) {
        const auto fs = fcondition_sets(s, y, k, l);
        const bool c1 = fs.h_k_y_empty || op.image(fs.i_k_y, fs.m_down_y).intersect(mc).empty();
        const bool c2 = fs.h_y_k_empty || op.image(fs.m_up_y, fs.i_y_k).intersect(mc).empty();
        const bool c3 = fs.h_k_l_y_empty || fs.j_k_l_y.intersect(mc).empty();
        if (c1 && c2 && c3) continue;
        v.out = outcome::not_associative;
        v.criterion = "fcondition";
        v.witness = "y=" + y.str() + ", k=" + std::to_string(k) + ", l=" + std::to_string(l) +
                    (!c1 ? " (C1)" : !c2 ? " (C2)" : " (C3)");
        return v;
      }
    }
  v.out = outcome::condition_holds;
  v.caveat = "witness-set verification, not a proof";
  return v;
}

namespace detail {

// Exact associativity scan of a two-place function given by an inner
// value table.  For indices (i,j,k) over the point list, the grouped
// values are pi(F(w[i][j], fv[k])) and pi(F(fv[i], w[j][k])) where
// w[i][j] is the carrier value of the grouped pair.  When both grouped
// pairs kept their raw F-value, associativity of F settles the triple
// without evaluation.
struct triple_scan_result {
  std::optional<std::array<std::size_t, 3>> witness;
  std::string lhs, rhs;
};

template <typename EvalOut>
triple_scan_result scan_triples(std::size_t n, const std::vector<ext_rat>& fv,
                                const std::vector<ext_rat>& w, const std::vector<char>& raw_kept,
                                const assoc_op& op, EvalOut&& finish) {
  std::map<std::string, std::string> memo;
  auto out_value = [&](const ext_rat& s) -> const std::string& {
    auto it = memo.find(s.str());
    if (it == memo.end()) it = memo.emplace(s.str(), finish(s)).first;
    return it->second;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ext_rat& wij = w[i * n + j];
      const bool ij_raw = raw_kept[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (ij_raw && raw_kept[j * n + k]) continue;
        const ext_rat s1 = op.eval(wij, fv[k]);
        const ext_rat s2 = op.eval(fv[i], w[j * n + k]);
        if (s1 == s2) continue;
        const std::string& lhs = out_value(s1);
        const std::string& rhs = out_value(s2);
        if (lhs != rhs) return {std::array<std::size_t, 3>{i, j, k}, lhs, rhs};
      }
    }
  return {};
}

}  // namespace detail

// Brute-force oracle for T on a finite witness cube: the piece-domain
// endpoints, the grid j/D, and one closure round of T-images.  Failures
// are reported with the lexicographically least witness triple.
inline verdict oracle_t(const scenario& s, const witness_config& w) {
  if (s.single_point_range())
    return {outcome::associative, "oracle_t", std::nullopt,
            "single-point range: T is constant", std::nullopt, {}};
  std::vector<big_rat> base = s.gen().breakpoints();
  for (unsigned j = 0; j <= w.grid_denominator; ++j)
    base.push_back(big_rat(j, w.grid_denominator));
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  std::vector<big_rat> pts = base;
  for (const auto& x : base)
    for (const auto& y : base) pts.push_back(s.t_eval(x, y));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const std::size_t n = pts.size();
  std::vector<ext_rat> fv(n);
  for (std::size_t i = 0; i < n; ++i) fv[i] = s.gen().eval(pts[i]);
  std::vector<ext_rat> wv(n * n);
  std::vector<char> raw_kept(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ext_rat raw = s.op().eval(fv[i], fv[j]);
      const ext_rat img = s.gen().eval(s.gen().pseudo_inverse(raw));
      wv[i * n + j] = img;
      raw_kept[i * n + j] = img == raw;
    }
  auto res = detail::scan_triples(n, fv, wv, raw_kept, s.op(), [&](const ext_rat& v) {
    return rat_str(s.gen().pseudo_inverse(v));
  });
  verdict v;
  v.criterion = "oracle_t";
  v.data.emplace_back("cube_size", std::to_string(n * n * n));
  if (res.witness) {
    const auto [i, j, k] = *res.witness;
    v.out = outcome::not_associative;
    v.witness = "(" + rat_str(pts[i]) + "," + rat_str(pts[j]) + "," + rat_str(pts[k]) + ")";
    v.data.emplace_back("T(T(x,y),z)", res.lhs);
    v.data.emplace_back("T(x,T(y,z))", res.rhs);
    return v;
  }
  v.out = outcome::associative;
  v.caveat = "exhaustive on the witness cube only";
  return v;
}

// The matching oracle for the induced operation on M.
inline verdict oracle_otimes(const scenario& s, const witness_config& w) {
  if (s.single_point_range())
    return {outcome::associative, "oracle_otimes", std::nullopt,
            "single-point range: the induced operation is trivial", std::nullopt, {}};
  std::vector<ext_rat> base = y_witnesses(s, w);
  std::vector<ext_rat> pts = base;
  for (const auto& x : base)
    for (const auto& y : base) pts.push_back(s.otimes(x, y));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const std::size_t n = pts.size();
  std::vector<ext_rat> wv(n * n);
  std::vector<char> raw_kept(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ext_rat raw = s.op().eval(pts[i], pts[j]);
      const ext_rat img = s.dec().g_m(raw);
      wv[i * n + j] = img;
      raw_kept[i * n + j] = img == raw;
    }
  auto res = detail::scan_triples(n, pts, wv, raw_kept, s.op(), [&](const ext_rat& v) {
    return s.dec().g_m(v).str();
  });
  verdict v;
  v.criterion = "oracle_otimes";
  v.data.emplace_back("cube_size", std::to_string(n * n * n));
  if (res.witness) {
    const auto [i, j, k] = *res.witness;
    v.out = outcome::not_associative;
    v.witness = "(" + pts[i].str() + "," + pts[j].str() + "," + pts[k].str() + ")";
    v.data.emplace_back("(x(x)y)(x)z", res.lhs);
    v.data.emplace_back("x(x)(y(x)z)", res.rhs);
    return v;
  }
  v.out = outcome::associative;
  v.caveat = "exhaustive on the witness set only";
  return v;
}

// F_0(x,y) = f^(-1)(F(f(x), f(y))) on the canonical representatives B.
inline big_rat f0_reduction(const scenario& s, const big_rat& x, const big_rat& y) {
  if (!s.gen().in_b(x)) throw not_in_b(rat_str(x));
  if (!s.gen().in_b(y)) throw not_in_b(rat_str(y));
  return s.t_eval(x, y);
}

enum class axiom_kind { t_norm, t_conorm, t_subnorm, t_superconorm };

inline const char* axiom_kind_name(axiom_kind k) {
  switch (k) {
    case axiom_kind::t_norm: return "t-norm";
    case axiom_kind::t_conorm: return "t-conorm";
    case axiom_kind::t_subnorm: return "t-subnorm";
    case axiom_kind::t_superconorm: return "t-superconorm";
  }
  return "?";
}

// Exhaustive axiom check on the grid j/D: commutativity, associativity,
// monotonicity, then the neutral element (t-norm/t-conorm) or the
// min/max bound (t-subnorm/t-superconorm).
inline verdict axiom_check(const std::function<big_rat(const big_rat&, const big_rat&)>& fn,
                           axiom_kind kind, const witness_config& w) {
  std::vector<big_rat> g;
  for (unsigned j = 0; j <= w.grid_denominator; ++j)
    g.push_back(big_rat(j, w.grid_denominator));
  const std::size_t n = g.size();
  std::vector<big_rat> tab(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tab[i * n + j] = fn(g[i], g[j]);
  auto at = [&](std::size_t i, std::size_t j) -> const big_rat& { return tab[i * n + j]; };

  verdict v;
  v.criterion = std::string("axioms:") + axiom_kind_name(kind);
  auto fail = [&](const std::string& axiom, const std::string& wit) {
    v.out = outcome::condition_fails;
    v.failed_hypothesis = axiom;
    v.witness = wit;
    return v;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i))
        return fail("commutativity", "(" + rat_str(g[i]) + "," + rat_str(g[j]) + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const big_rat lhs = fn(at(i, j), g[k]);
        const big_rat rhs = fn(g[i], at(j, k));
        if (lhs != rhs)
          return fail("associativity",
                      "(" + rat_str(g[i]) + "," + rat_str(g[j]) + "," + rat_str(g[k]) + ")");
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (at(i, j + 1) < at(i, j))
        return fail("monotonicity", "(" + rat_str(g[i]) + "," + rat_str(g[j]) + ")");
  switch (kind) {
    case axiom_kind::t_norm:
      for (std::size_t i = 0; i < n; ++i)
        if (fn(g[i], 1) != g[i]) return fail("neutral element 1", rat_str(g[i]));
      break;
    case axiom_kind::t_conorm:
      for (std::size_t i = 0; i < n; ++i)
        if (fn(g[i], 0) != g[i]) return fail("neutral element 0", rat_str(g[i]));
      break;
    case axiom_kind::t_subnorm:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (at(i, j) > std::min(g[i], g[j]))
            return fail("bound T <= min", "(" + rat_str(g[i]) + "," + rat_str(g[j]) + ")");
      break;
    case axiom_kind::t_superconorm:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (at(i, j) < std::max(g[i], g[j]))
            return fail("bound S >= max", "(" + rat_str(g[i]) + "," + rat_str(g[j]) + ")");
      break;
  }
  v.out = outcome::condition_holds;
  return v;
}

}  // namespace genassoc
