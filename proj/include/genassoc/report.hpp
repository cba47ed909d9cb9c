#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "genassoc/scenario_io.hpp"

namespace genassoc {

// Report assembly: one JSON document per invocation, deterministic
// (keys sorted by nlohmann::json, no timestamps), with a findings array
// for divergences and cross-oracle disagreements.  Fixture files may
// carry documented reference values; whenever a computed quantity
// differs from its reference the difference is reported, flagged
// specially when it is only a right-endpoint (span) difference.

inline json verdict_json(const verdict& v) {
  json j;
  j["criterion"] = v.criterion;
  j["verdict"] = outcome_name(v.out);
  if (v.witness) j["witness"] = *v.witness;
  if (v.caveat) j["caveat"] = *v.caveat;
  if (v.failed_hypothesis) j["failed_hypothesis"] = *v.failed_hypothesis;
  for (const auto& [key, val] : v.data) j[key] = val;
  return j;
}

inline json decomposition_json(const decomposition& dec) {
  json j;
  json s = json::array();
  for (const auto& g : dec.gaps()) s.push_back(json::array({g.b.str(), g.d.str()}));
  json c = json::array();
  for (const auto& p : dec.c_points()) c.push_back(p.str());
  json anchors = json::array();
  for (std::size_t k = 0; k < dec.gaps().size(); ++k) anchors.push_back(dec.anchor(k).str());
  j["S"] = s;
  j["C"] = c;
  j["M"] = dec.m().str();
  j["f0"] = dec.f0().str();
  j["f1"] = dec.f1().str();
  j["anchors"] = anchors;
  j["reconstruction_ok"] = dec.reconstruction_ok();
  return j;
}

// True when computed and reference differ only in that the reference
// closes right endpoints the computed set leaves open.
inline bool right_endpoint_divergence_only(const range_set& computed, const range_set& ref) {
  if (computed == ref) return false;
  if (!computed.subset_of(ref)) return false;
  const range_set extra = ref.difference(computed);
  for (const auto& comp : extra.components()) {
    if (!comp.is_point()) return false;
    bool matches = false;
    for (const auto& c : computed.components())
      if (c.hi == comp.lo && !c.hi_closed) matches = true;
    if (!matches) return false;
  }
  return true;
}

class report_builder {
 public:
  report_builder(std::string command, const scenario_spec& spec)
      : spec_(spec) {
    doc_["meta"] = {{"tool", "genassoc"}, {"version", "0.1.0"}, {"command", command}};
    doc_["scenario"] = render_spec(spec);
    doc_["verdicts"] = json::array();
    doc_["findings"] = json::array();
    doc_["tables"] = json::object();
  }

  json& meta() { return doc_["meta"]; }
  json& tables() { return doc_["tables"]; }

  void set_decomposition(const decomposition& dec) {
    doc_["decomposition"] = decomposition_json(dec);
    if (dec.forced())
      add_finding("forced_non_class_f",
                  "generator fails the class membership test; results computed under force");
    check_reference_set("M", dec.m());
    check_reference_pair_list("S", dec.gaps());
    check_reference_points("C", dec.c_points());
  }

  void add_verdict(const verdict& v) { doc_["verdicts"].push_back(verdict_json(v)); }

  void add_finding(const std::string& kind, const std::string& detail,
                   const json& extra = json::object()) {
    json f = extra;
    f["kind"] = kind;
    f["detail"] = detail;
    doc_["findings"].push_back(f);
  }

  // Compare a computed set against the documented reference of the same
  // name, when the fixture carries one.
  void check_reference_set(const std::string& key, const range_set& computed) {
    if (!spec_.reference.contains(key)) return;
    if (!spec_.reference[key].is_string()) return;
    auto ref = range_set::parse(spec_.reference[key].get<std::string>());
    if (!ref) {
      add_finding("reference_unreadable", "reference value for " + key + " did not parse");
      return;
    }
    if (computed == *ref) return;
    json extra = {{"quantity", key}, {"computed", computed.str()}, {"reference", ref->str()}};
    if (right_endpoint_divergence_only(computed, *ref))
      add_finding("span_right_endpoint_divergence",
                  key + ": computed span is right-open where the reference closes it", extra);
    else
      add_finding("reference_mismatch", key + ": computed value differs from the reference",
                  extra);
  }

  void check_reference_verdict(const std::string& key, const verdict& v) {
    if (!spec_.reference.contains(key) || !spec_.reference[key].is_string()) return;
    const std::string expected = spec_.reference[key].get<std::string>();
    if (outcome_name(v.out) != expected)
      add_finding("verdict_reference_mismatch",
                  key + ": computed verdict differs from the documented reference",
                  {{"quantity", key}, {"computed", outcome_name(v.out)}, {"reference", expected}});
  }

  // Findings for disagreeing oracles: the two brute-force checks are
  // linked by the reduction theorem, so a split verdict is itself a result.
  void cross_check_oracles(const verdict& t, const verdict& ot) {
    if (t.out != ot.out)
      add_finding("oracle_disagreement",
                  "the T-oracle and the induced-operation oracle disagree",
                  {{"oracle_t", outcome_name(t.out)}, {"oracle_otimes", outcome_name(ot.out)}});
  }

  const json& doc() const { return doc_; }

  std::string human_summary() const {
    std::ostringstream os;
    os << "genassoc " << doc_["meta"]["command"].get<std::string>() << "\n";
    if (doc_.contains("decomposition")) {
      const json& d = doc_["decomposition"];
      os << "  M  = " << d["M"].get<std::string>() << "\n";
      os << "  S  = [";
      for (std::size_t i = 0; i < d["S"].size(); ++i) {
        if (i) os << ", ";
        os << "[" << d["S"][i][0].get<std::string>() << "," << d["S"][i][1].get<std::string>()
           << "]";
      }
      os << "]\n  C  = {";
      for (std::size_t i = 0; i < d["C"].size(); ++i) {
        if (i) os << ", ";
        os << d["C"][i].get<std::string>();
      }
      os << "}\n";
    }
    for (const auto& v : doc_["verdicts"]) {
      os << "  " << v["criterion"].get<std::string>() << ": " << v["verdict"].get<std::string>();
      if (v.contains("witness")) os << "  witness " << v["witness"].get<std::string>();
      if (v.contains("failed_hypothesis"))
        os << "  [hypothesis: " << v["failed_hypothesis"].get<std::string>() << "]";
      os << "\n";
    }
    for (const auto& f : doc_["findings"])
      os << "  finding(" << f["kind"].get<std::string>() << "): "
         << f["detail"].get<std::string>() << "\n";
    return os.str();
  }

 private:
  json doc_;
  const scenario_spec& spec_;

  void check_reference_pair_list(const std::string& key,
                                 const std::vector<decomposition::gap>& gaps) {
    if (!spec_.reference.contains(key) || !spec_.reference[key].is_array()) return;
    const json& ref = spec_.reference[key];
    bool equal = ref.size() == gaps.size();
    for (std::size_t i = 0; equal && i < gaps.size(); ++i)
      equal = ref[i].is_array() && ref[i].size() == 2 &&
              ref[i][0].get<std::string>() == gaps[i].b.str() &&
              ref[i][1].get<std::string>() == gaps[i].d.str();
    if (!equal)
      add_finding("reference_mismatch", key + ": computed gap system differs from the reference",
                  {{"quantity", key}});
  }

  void check_reference_points(const std::string& key, const std::vector<ext_rat>& pts) {
    if (!spec_.reference.contains(key) || !spec_.reference[key].is_array()) return;
    const json& ref = spec_.reference[key];
    bool equal = ref.size() == pts.size();
    for (std::size_t i = 0; equal && i < pts.size(); ++i)
      equal = ref[i].is_string() && ref[i].get<std::string>() == pts[i].str();
    if (!equal)
      add_finding("reference_mismatch", key + ": computed point set differs from the reference",
                  {{"quantity", key}});
  }
};

}  // namespace genassoc
