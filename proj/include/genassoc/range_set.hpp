#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "genassoc/rational.hpp"

namespace genassoc {

// A non-empty subinterval of [0,inf].  lo < hi, or lo == hi with both
// endpoints closed (a singleton).  An endpoint at inf may be closed:
// [7,inf] contains the infinity point, [7,inf) does not.
struct interval {
  ext_rat lo, hi;
  bool lo_closed = true, hi_closed = true;

  interval(ext_rat l, ext_rat h, bool lc, bool hc)
      : lo(std::move(l)), hi(std::move(h)), lo_closed(lc), hi_closed(hc) {
    if (hi < lo || (lo == hi && !(lo_closed && hi_closed)))
      throw std::invalid_argument("empty or inverted interval [" + lo.str() + "," + hi.str() + "]");
  }

  static interval point(ext_rat x) { return interval(x, x, true, true); }
  static interval whole() { return interval(ext_rat(0), ext_rat::inf(), true, true); }
  static interval closed(ext_rat l, ext_rat h) { return interval(std::move(l), std::move(h), true, true); }

  bool is_point() const { return lo == hi; }

  bool contains(const ext_rat& x) const {
    if (x < lo || (x == lo && !lo_closed)) return false;
    if (hi < x || (x == hi && !hi_closed)) return false;
    return true;
  }

  std::string str() const {
    if (is_point()) return "{" + lo.str() + "}";
    return std::string(lo_closed ? "[" : "(") + lo.str() + "," + hi.str() +
           (hi_closed ? "]" : ")");
  }

  bool operator==(const interval& o) const {
    return lo == o.lo && hi == o.hi && lo_closed == o.lo_closed && hi_closed == o.hi_closed;
  }
};

// Canonical finite union of disjoint, non-mergeable intervals of [0,inf],
// sorted by lower endpoint.  Equal sets have identical component lists.
class range_set {
 public:
  struct extrema_t {
    ext_rat inf, sup;
    bool inf_attained, sup_attained;
  };

  range_set() = default;
  range_set(interval iv) : comps_{std::move(iv)} {}
  range_set(std::initializer_list<interval> ivs) : comps_(ivs) { normalize(); }

  static range_set empty_set() { return range_set(); }
  static range_set point(ext_rat x) { return range_set(interval::point(std::move(x))); }
  static range_set whole() { return range_set(interval::whole()); }
  static range_set of(std::vector<interval> ivs) {
    range_set r;
    r.comps_ = std::move(ivs);
    r.normalize();
    return r;
  }

  bool empty() const { return comps_.empty(); }
  const std::vector<interval>& components() const { return comps_; }

  bool contains(const ext_rat& x) const {
    for (const auto& c : comps_) {
      if (c.contains(x)) return true;
      if (x < c.lo) break;
    }
    return false;
  }

  extrema_t extrema() const {
    if (comps_.empty()) throw empty_set_error();
    const auto& a = comps_.front();
    const auto& b = comps_.back();
    return {a.lo, b.hi, a.lo_closed, b.hi_closed};
  }

  // O(S) = union over x,y in S of [min{x,y}, max{x,y}).  Empty for the
  // empty set and for singletons; otherwise the span from inf to sup,
  // left endpoint included iff the infimum is attained, right endpoint
  // always excluded.
  range_set o_span() const {
    if (comps_.empty()) return {};
    auto e = extrema();
    if (e.inf == e.sup) return {};
    return range_set(interval(e.inf, e.sup, e.inf_attained, false));
  }

  range_set union_with(const range_set& o) const {
    return combine(*this, &o, [](bool a, bool b) { return a || b; });
  }
  range_set intersect(const range_set& o) const {
    return combine(*this, &o, [](bool a, bool b) { return a && b; });
  }
  range_set difference(const range_set& o) const {
    return combine(*this, &o, [](bool a, bool b) { return a && !b; });
  }
  // Complement relative to [0,inf], the universe of the carrier.
  range_set complement() const {
    return combine(*this, nullptr, [](bool a, bool) { return !a; });
  }

  bool subset_of(const range_set& o) const { return difference(o).empty(); }

  bool operator==(const range_set& o) const { return comps_ == o.comps_; }

  std::string str() const {
    if (comps_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (i) s += " u ";
      s += comps_[i].str();
    }
    return s;
  }

  // Parses the textual form produced by str(), e.g. "[0,2) u {3} u [6,7]".
  static std::optional<range_set> parse(std::string_view text) {
    try {
      return parse_impl(text);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }

 private:
  static std::optional<range_set> parse_impl(std::string_view text) {
    std::vector<interval> ivs;
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip_ws();
    if (text.substr(pos) == "{}") return range_set();
    while (pos < text.size()) {
      skip_ws();
      if (pos >= text.size()) return std::nullopt;
      char open = text[pos];
      if (open == '{') {
        auto close = text.find('}', pos);
        if (close == std::string_view::npos) return std::nullopt;
        auto v = ext_rat::parse(text.substr(pos + 1, close - pos - 1));
        if (!v) return std::nullopt;
        ivs.push_back(interval::point(*v));
        pos = close + 1;
      } else if (open == '[' || open == '(') {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) return std::nullopt;
        auto close = text.find_first_of("])", comma);
        if (close == std::string_view::npos) return std::nullopt;
        auto lo = ext_rat::parse(text.substr(pos + 1, comma - pos - 1));
        auto hi = ext_rat::parse(text.substr(comma + 1, close - comma - 1));
        if (!lo || !hi) return std::nullopt;
        ivs.emplace_back(*lo, *hi, open == '[', text[close] == ']');
        pos = close + 1;
      } else {
        return std::nullopt;
      }
      skip_ws();
      if (pos < text.size()) {
        if (text[pos] != 'u') return std::nullopt;
        ++pos;
      }
    }
    return of(std::move(ivs));
  }

 public:
  friend std::ostream& operator<<(std::ostream& os, const range_set& s) { return os << s.str(); }

 private:
  std::vector<interval> comps_;

  void normalize() {
    if (comps_.empty()) return;
    std::sort(comps_.begin(), comps_.end(), [](const interval& a, const interval& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      return a.lo_closed && !b.lo_closed;
    });
    std::vector<interval> out;
    out.push_back(comps_.front());
    for (std::size_t i = 1; i < comps_.size(); ++i) {
      interval& prev = out.back();
      const interval& cur = comps_[i];
      const bool disjoint_with_gap =
          prev.hi < cur.lo || (prev.hi == cur.lo && !prev.hi_closed && !cur.lo_closed);
      if (disjoint_with_gap) {
        out.push_back(cur);
        continue;
      }
      if (cur.hi > prev.hi || (cur.hi == prev.hi && cur.hi_closed)) {
        prev.hi = cur.hi;
        prev.hi_closed = cur.hi_closed;
      }
    }
    comps_ = std::move(out);
  }

  // Evaluates a pointwise boolean combination of two sets exactly, by
  // splitting [0,inf] at every endpoint and testing each atomic piece
  // (the endpoints themselves and the open intervals between them).
  static range_set combine(const range_set& a, const range_set* b,
                           const std::function<bool(bool, bool)>& pred) {
    std::vector<ext_rat> cuts{ext_rat(0), ext_rat::inf()};
    auto collect = [&](const range_set& s) {
      for (const auto& c : s.comps_) {
        cuts.push_back(c.lo);
        cuts.push_back(c.hi);
      }
    };
    collect(a);
    if (b) collect(*b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto member = [&](const ext_rat& x) {
      return pred(a.contains(x), b ? b->contains(x) : false);
    };

    std::vector<interval> out;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      if (member(cuts[i])) out.push_back(interval::point(cuts[i]));
      if (i + 1 == cuts.size()) break;
      // Sample one interior point of (cuts[i], cuts[i+1]); membership is
      // constant there because every component endpoint is a cut.
      ext_rat sample = cuts[i + 1].is_inf() ? cuts[i] + ext_rat(1)
                                            : midpoint(cuts[i], cuts[i + 1]);
      if (member(sample)) out.emplace_back(cuts[i], cuts[i + 1], false, false);
    }
    return of(std::move(out));
  }
};

}  // namespace genassoc
