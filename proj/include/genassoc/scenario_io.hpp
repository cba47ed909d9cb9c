#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "genassoc/analysis.hpp"

namespace genassoc {

using json = nlohmann::json;

// The parsed scenario document: generator pieces, base operation, witness
// configuration, the force flag, and optional reference values used by
// the report to emit divergence findings.
struct scenario_spec {
  std::vector<gen_piece> pieces;
  std::string f_name;
  std::optional<big_rat> f_param;
  witness_config witness;
  bool force = false;
  json reference = json::object();

  scenario build() const {
    return scenario::make(generator::make(pieces), assoc_op::make(f_name, f_param), force);
  }
};

namespace io_detail {

inline const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw parse_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(path + "/" + key, "missing field");
  return *it;
}

inline std::string need_string(const json& j, const char* key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_string()) throw parse_error(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

inline bool need_bool(const json& j, const char* key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_boolean()) throw parse_error(path + "/" + key, "expected a boolean");
  return v.get<bool>();
}

inline ext_rat need_ext(const json& j, const char* key, const std::string& path) {
  auto v = ext_rat::parse(need_string(j, key, path));
  if (!v) throw parse_error(path + "/" + key, "expected a rational 'p/q', 'p', or 'inf'");
  return *v;
}

inline big_rat need_rat(const json& j, const char* key, const std::string& path) {
  auto v = rat_parse(need_string(j, key, path));
  if (!v) throw parse_error(path + "/" + key, "expected a rational 'p/q' or 'p'");
  return *v;
}

}  // namespace io_detail

inline scenario_spec parse_spec(const json& doc) {
  using namespace io_detail;
  scenario_spec spec;
  const json& pieces = need(doc, "pieces", "");
  if (!pieces.is_array() || pieces.empty()) throw parse_error("/pieces", "expected a non-empty array");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string path = "/pieces/" + std::to_string(i);
    const json& pj = pieces[i];
    const json& dj = need(pj, "domain", path);
    const std::string dpath = path + "/domain";
    ext_rat lo = need_ext(dj, "lo", dpath);
    ext_rat hi = need_ext(dj, "hi", dpath);
    bool lc = need_bool(dj, "lo_closed", dpath);
    bool hc = need_bool(dj, "hi_closed", dpath);
    if (hi < lo || (lo == hi && !(lc && hc)))
      throw validation_error(dpath, "empty or inverted piece domain");
    interval dom(lo, hi, lc, hc);

    const json& ej = need(pj, "expr", path);
    const std::string epath = path + "/expr";
    const std::string kind = need_string(ej, "kind", epath);
    piece_expr expr = piece_expr::constant(ext_rat(0));
    if (kind == "constant") {
      expr = piece_expr::constant(need_ext(ej, "c", epath));
    } else if (kind == "affine") {
      expr = piece_expr::affine(need_rat(ej, "a", epath), need_rat(ej, "b", epath));
    } else if (kind == "mobius") {
      expr = piece_expr::mobius(need_rat(ej, "a", epath), need_rat(ej, "b", epath),
                                need_rat(ej, "c", epath), need_rat(ej, "d", epath));
    } else {
      throw parse_error(epath + "/kind", "unknown piece kind '" + kind + "'");
    }
    spec.pieces.push_back({dom, expr});
  }

  const json& fj = need(doc, "F", "");
  spec.f_name = need_string(fj, "name", "/F");
  if (fj.contains("alpha")) spec.f_param = need_rat(fj, "alpha", "/F");
  if (fj.contains("beta")) spec.f_param = need_rat(fj, "beta", "/F");

  if (doc.contains("witness")) {
    const json& wj = doc["witness"];
    if (wj.contains("grid_denominator")) {
      if (!wj["grid_denominator"].is_number_unsigned() || wj["grid_denominator"] == 0)
        throw parse_error("/witness/grid_denominator", "expected a positive integer");
      spec.witness.grid_denominator = wj["grid_denominator"].get<unsigned>();
    }
    if (wj.contains("extra_points")) {
      const json& ep = wj["extra_points"];
      if (!ep.is_array()) throw parse_error("/witness/extra_points", "expected an array");
      for (std::size_t i = 0; i < ep.size(); ++i) {
        if (!ep[i].is_string())
          throw parse_error("/witness/extra_points/" + std::to_string(i), "expected a string");
        auto v = ext_rat::parse(ep[i].get<std::string>());
        if (!v)
          throw parse_error("/witness/extra_points/" + std::to_string(i), "bad rational");
        spec.witness.extra_points.push_back(*v);
      }
    }
  }
  if (doc.contains("force")) {
    if (!doc["force"].is_boolean()) throw parse_error("/force", "expected a boolean");
    spec.force = doc["force"].get<bool>();
  }
  if (doc.contains("reference")) {
    if (!doc["reference"].is_object()) throw parse_error("/reference", "expected an object");
    spec.reference = doc["reference"];
  }
  return spec;
}

inline scenario_spec parse_spec_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error("", e.what());
  }
  return parse_spec(doc);
}

inline json render_spec(const scenario_spec& spec) {
  json pieces = json::array();
  for (const auto& p : spec.pieces) {
    json pj;
    pj["domain"] = {{"lo", p.domain.lo.str()},
                    {"hi", p.domain.hi.str()},
                    {"lo_closed", p.domain.lo_closed},
                    {"hi_closed", p.domain.hi_closed}};
    switch (p.expr.kind) {
      case piece_expr::kind_t::constant:
        pj["expr"] = {{"kind", "constant"}, {"c", p.expr.const_value.str()}};
        break;
      case piece_expr::kind_t::affine:
        pj["expr"] = {{"kind", "affine"}, {"a", rat_str(p.expr.a)}, {"b", rat_str(p.expr.b)}};
        break;
      case piece_expr::kind_t::mobius:
        pj["expr"] = {{"kind", "mobius"},
                      {"a", rat_str(p.expr.a)},
                      {"b", rat_str(p.expr.b)},
                      {"c", rat_str(p.expr.c)},
                      {"d", rat_str(p.expr.d)}};
        break;
    }
    pieces.push_back(pj);
  }
  json fj;
  fj["name"] = spec.f_name;
  if (spec.f_param) {
    if (spec.f_name == "scaled_product") fj["alpha"] = rat_str(*spec.f_param);
    if (spec.f_name == "shifted_sum") fj["beta"] = rat_str(*spec.f_param);
  }
  json doc;
  doc["pieces"] = pieces;
  doc["F"] = fj;
  json wj;
  wj["grid_denominator"] = spec.witness.grid_denominator;
  json ep = json::array();
  for (const auto& e : spec.witness.extra_points) ep.push_back(e.str());
  wj["extra_points"] = ep;
  doc["witness"] = wj;
  doc["force"] = spec.force;
  if (!spec.reference.empty()) doc["reference"] = spec.reference;
  return doc;
}

}  // namespace genassoc
