// genassoc: constructs T(x,y) = f^(-1)(F(f(x),f(y))) from a scenario
// file, computes the range decomposition, and decides associativity via
// the span criteria, the F-condition, and brute-force oracles.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "genassoc/report.hpp"

using namespace genassoc;

namespace {

scenario_spec load_spec(const std::string& path, bool force_flag) {
  std::ifstream in(path);
  if (!in) throw parse_error("", "cannot open spec file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  scenario_spec spec = parse_spec_text(text);
  if (force_flag) spec.force = true;
  return spec;
}

void emit(const report_builder& rb, const std::string& out_path) {
  std::cout << rb.human_summary();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw parse_error("", "cannot write report to '" + out_path + "'");
    out << rb.doc().dump(2) << "\n";
  }
}

json gm_table(const decomposition& dec, unsigned denom) {
  // Table cap: f(1) when finite and below 24, else 24; infinity appended.
  big_rat cap = 24;
  if (dec.f1().is_finite() && dec.f1().value() < cap) cap = dec.f1().value();
  json rows = json::array();
  for (big_int j = 0; big_rat(j, denom) <= cap; ++j) {
    const ext_rat x{big_rat(j, denom)};
    rows.push_back(json::array({x.str(), dec.g_m(x).str()}));
  }
  rows.push_back(json::array({"inf", dec.g_m(ext_rat::inf()).str()}));
  return rows;
}

void run_check(report_builder& rb, const scenario& s, const scenario_spec& spec,
               const std::string& method, unsigned grid) {
  witness_config w = spec.witness;
  w.grid_denominator = grid;
  const bool want_sufficient = method == "sufficient" || method == "all";
  const bool want_fcondition = method == "fcondition" || method == "all";
  const bool want_oracle = method == "oracle" || method == "all";

  rb.check_reference_set("I_union", s.i_union());
  if (spec.reference.contains("F(I,M)"))
    rb.check_reference_set("F(I,M)", s.op().image(s.i_union(), s.dec().m()));

  bool need_fallback = false;
  if (want_sufficient) {
    const verdict v = check_sufficient(s);
    rb.add_verdict(v);
    need_fallback |= v.out == outcome::inconclusive;
  }
  if (want_fcondition) {
    const verdict v = check_fcondition(s, w);
    rb.add_verdict(v);
    rb.check_reference_set("jfrak", jfrak(s, w));
    need_fallback |= v.out == outcome::not_applicable;
  }
  if (want_oracle || need_fallback) {
    const verdict vt = oracle_t(s, w);
    rb.add_verdict(vt);
    rb.check_reference_verdict("oracle", vt);
    const verdict vo = oracle_otimes(s, w);
    rb.add_verdict(vo);
    rb.cross_check_oracles(vt, vo);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction and associativity analysis of generated operations"};
  app.require_subcommand(1);

  std::string spec_path, out_path, method = "all", kind = "all", fn = "t", at;
  unsigned grid = 0;
  bool force = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_path, "scenario spec file (JSON)")->required();
    cmd->add_option("--out", out_path, "write the JSON report to this path");
    cmd->add_flag("--force", force, "analyze even when the generator fails the class test");
  };

  auto* c_dec = app.add_subcommand("decompose", "compute the associated pair (S,C) and M");
  add_common(c_dec);
  auto* c_gm = app.add_subcommand("gm", "evaluate or tabulate the range projection");
  add_common(c_gm);
  c_gm->add_option("--at", at, "evaluate at one point instead of tabulating");
  c_gm->add_option("--grid", grid, "table denominator (default 8)");
  auto* c_ot = app.add_subcommand("otimes-table", "tabulate the induced operation on M");
  add_common(c_ot);
  auto* c_tt = app.add_subcommand("t-table", "tabulate T on the unit grid");
  add_common(c_tt);
  c_tt->add_option("--grid", grid, "table denominator (default 8)");
  auto* c_ck = app.add_subcommand("check", "run the associativity criteria and oracles");
  add_common(c_ck);
  c_ck->add_option("--method", method, "sufficient | fcondition | oracle | all")
      ->check(CLI::IsMember({"sufficient", "fcondition", "oracle", "all"}));
  c_ck->add_option("--grid", grid, "witness grid denominator (default 16)");
  auto* c_ax = app.add_subcommand("axioms", "check aggregation axioms on a grid");
  add_common(c_ax);
  c_ax->add_option("--kind", kind, "t-norm | t-conorm | t-subnorm | t-superconorm | all")
      ->check(CLI::IsMember({"t-norm", "t-conorm", "t-subnorm", "t-superconorm", "all"}));
  c_ax->add_option("--fn", fn, "t | t-modified")->check(CLI::IsMember({"t", "t-modified"}));
  c_ax->add_option("--grid", grid, "axiom grid denominator (default 16)");

  CLI11_PARSE(app, argc, argv);

  try {
    const scenario_spec spec = load_spec(spec_path, force);
    const scenario s = spec.build();

    if (c_dec->parsed()) {
      report_builder rb("decompose", spec);
      rb.set_decomposition(s.dec());
      emit(rb, out_path);
    } else if (c_gm->parsed()) {
      report_builder rb("gm", spec);
      rb.set_decomposition(s.dec());
      if (!at.empty()) {
        auto q = ext_rat::parse(at);
        if (!q) throw parse_error("--at", "bad rational '" + at + "'");
        rb.tables()["gm_at"] = json::array({q->str(), s.dec().g_m(*q).str()});
        std::cout << s.dec().g_m(*q).str() << "\n";
      } else {
        rb.tables()["gm"] = gm_table(s.dec(), grid ? grid : 8);
      }
      emit(rb, out_path);
    } else if (c_ot->parsed()) {
      report_builder rb("otimes-table", spec);
      rb.set_decomposition(s.dec());
      const auto ys = y_witnesses(s, spec.witness);
      json rows = json::array();
      for (const auto& x : ys)
        for (const auto& y : ys)
          rows.push_back(json::array({x.str(), y.str(), s.otimes(x, y).str()}));
      rb.tables()["otimes"] = rows;
      emit(rb, out_path);
    } else if (c_tt->parsed()) {
      report_builder rb("t-table", spec);
      rb.set_decomposition(s.dec());
      const unsigned d = grid ? grid : 8;
      json rows = json::array();
      for (unsigned i = 0; i <= d; ++i)
        for (unsigned j = 0; j <= d; ++j) {
          const big_rat x(i, d), y(j, d);
          rows.push_back(
              json::array({rat_str(x), rat_str(y), rat_str(s.t_eval(x, y))}));
        }
      rb.tables()["t"] = rows;
      emit(rb, out_path);
    } else if (c_ck->parsed()) {
      report_builder rb("check", spec);
      rb.meta()["method"] = method;
      rb.set_decomposition(s.dec());
      run_check(rb, s, spec, method, grid ? grid : 16);
      emit(rb, out_path);
    } else if (c_ax->parsed()) {
      report_builder rb("axioms", spec);
      rb.set_decomposition(s.dec());
      witness_config w = spec.witness;
      w.grid_denominator = grid ? grid : 16;
      auto call_t = [&](const big_rat& x, const big_rat& y) {
        return fn == "t-modified" ? s.t_modified(x, y) : s.t_eval(x, y);
      };
      std::vector<axiom_kind> kinds;
      if (kind == "all")
        kinds = {axiom_kind::t_norm, axiom_kind::t_conorm, axiom_kind::t_subnorm,
                 axiom_kind::t_superconorm};
      else if (kind == "t-norm")
        kinds = {axiom_kind::t_norm};
      else if (kind == "t-conorm")
        kinds = {axiom_kind::t_conorm};
      else if (kind == "t-subnorm")
        kinds = {axiom_kind::t_subnorm};
      else
        kinds = {axiom_kind::t_superconorm};
      for (auto k : kinds) rb.add_verdict(axiom_check(call_t, k, w));
      emit(rb, out_path);
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const not_in_class_f& e) {
    std::cerr << "validation error: " << e.what() << " (use --force to analyze anyway)\n";
    return 1;
  } catch (const outside_valid_domain& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
