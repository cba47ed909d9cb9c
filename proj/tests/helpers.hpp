#pragma once

#include <fstream>
#include <random>
#include <string>

#include "genassoc/scenario_io.hpp"

namespace ga = genassoc;

inline ga::ext_rat q(const std::string& s) {
  auto v = ga::ext_rat::parse(s);
  if (!v) throw std::runtime_error("bad rational literal in test: " + s);
  return *v;
}

inline ga::big_rat br(const std::string& s) {
  auto v = ga::rat_parse(s);
  if (!v) throw std::runtime_error("bad rational literal in test: " + s);
  return *v;
}

inline ga::range_set rs(const std::string& s) {
  auto v = ga::range_set::parse(s);
  if (!v) throw std::runtime_error("bad range set literal in test: " + s);
  return *v;
}

inline ga::scenario_spec load_fixture(const std::string& name) {
  const std::string path = std::string(GENASSOC_SCENARIO_DIR) + "/" + name + ".json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return ga::parse_spec_text(text);
}

inline ga::generator load_generator(const std::string& name) {
  return ga::generator::make(load_fixture(name).pieces);
}

inline ga::scenario load_scenario(const std::string& name) {
  return load_fixture(name).build();
}

// Independent oracle: the pointwise pair union of [min,max) over a finite
// point set, assembled without the span shortcut.
inline ga::range_set o_span_bruteforce(const std::vector<ga::ext_rat>& pts) {
  ga::range_set acc;
  for (const auto& x : pts)
    for (const auto& y : pts) {
      if (x < y)
        acc = acc.union_with(ga::range_set(ga::interval(x, y, true, false)));
      else if (y < x)
        acc = acc.union_with(ga::range_set(ga::interval(y, x, true, false)));
    }
  return acc;
}

// Independent oracle for the pseudo-inverse: the largest grid point whose
// value stays below y.  Brackets the exact supremum from below by at most
// one grid step.
inline ga::big_rat pseudo_inverse_scan(const ga::generator& g, const ga::ext_rat& y,
                                       unsigned denom = 1024) {
  ga::big_rat best = 0;
  for (unsigned j = 0; j <= denom; ++j) {
    const ga::big_rat x(j, denom);
    if (g.eval(x) < y) best = x;
  }
  return best;
}

// Deterministic random rationals for property tests.
struct rat_source {
  std::mt19937 rng;
  explicit rat_source(unsigned seed) : rng(seed) {}

  ga::big_rat unit() {  // a rational in [0,1]
    std::uniform_int_distribution<int> den(1, 64);
    const int d = den(rng);
    std::uniform_int_distribution<int> num(0, d);
    return ga::big_rat(num(rng), d);
  }

  ga::ext_rat point(int max_int = 24) {  // a point of [0,max_int] u {inf}
    std::uniform_int_distribution<int> kind(0, 19);
    if (kind(rng) == 0) return ga::ext_rat::inf();
    std::uniform_int_distribution<int> den(1, 16);
    const int d = den(rng);
    std::uniform_int_distribution<int> num(0, max_int * d);
    return ga::ext_rat(ga::big_rat(num(rng), d));
  }

  // A random member of M, drawn from a uniformly chosen component.
  ga::ext_rat member(const ga::range_set& m) {
    const auto& comps = m.components();
    std::uniform_int_distribution<std::size_t> pick(0, comps.size() - 1);
    const auto& c = comps[pick(rng)];
    if (c.is_point()) return c.lo;
    if (c.hi.is_inf()) {
      std::uniform_int_distribution<int> off(c.lo_closed ? 0 : 1, 40);
      return c.lo + ga::ext_rat(ga::big_rat(off(rng), 4));
    }
    std::uniform_int_distribution<int> num(c.lo_closed ? 0 : 1,
                                           c.hi_closed ? 64 : 63);
    const ga::big_rat t(num(rng), 64);
    return ga::ext_rat(c.lo.value() + t * (c.hi.value() - c.lo.value()));
  }
};
