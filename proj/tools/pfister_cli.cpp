#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pfister/abstract_tight.hpp"
#include "pfister/error.hpp"
#include "pfister/oracle.hpp"
#include "pfister/parse.hpp"
#include "pfister/scenarios.hpp"

namespace {

using namespace pfister;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  return Json::parse(in);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + out);
  f << text;
}

RingPtr ring_for(const std::string& text, const std::string& vars, const std::string& coef) {
  std::vector<std::string> names;
  if (!vars.empty()) {
    std::string cur;
    for (char c : vars + ",") {
      if (c == ',') {
        if (!cur.empty()) names.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
  } else {
    names = collect_identifiers(text);
  }
  return make_ring(names, FiniteField::from_spec(coef));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pfister form linkage toolkit"};
  app.require_subcommand(1);

  ScenarioConfig cfg;
  std::string field = "2^4", format = "json", out, file;
  bool serial = false;

  auto* run = app.add_subcommand("run", "run a scenario and print its report");
  std::string scenario;
  run->add_option("scenario", scenario, "scenario name (see 'list')");
  run->add_option("--file", file, "JSON scenario definition");
  run->add_option("--n", cfg.n, "fold / family size parameter");
  run->add_option("--s", cfg.s, "number of forms");
  run->add_option("--field", field, "specialization field, e.g. 2^4")->capture_default_str();
  run->add_option("--seed", cfg.seed)->capture_default_str();
  run->add_option("--trials", cfg.trials, "specialization trials")->capture_default_str();
  run->add_option("--degree-bound", cfg.degree_bound, "isotropy search degree")->capture_default_str();
  run->add_option("--samples", cfg.samples, "P samples per configuration (ladder-fuzz)")->capture_default_str();
  run->add_option("--pairs", cfg.pairs, "random pairs (cross-criteria)")->capture_default_str();
  run->add_option("--format", format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  run->add_option("--out", out, "write the report here instead of stdout");
  run->add_flag("--serial", serial, "use the serial kernels");

  app.add_subcommand("list", "list scenarios");

  std::string text, vars, coef = "2";
  auto* norm = app.add_subcommand("normalize", "normal form of a symbol sum");
  norm->add_option("sum", text, "e.g. \"((x,y)) + ((y,x))\"")->required();
  norm->add_option("--vars", vars, "comma separated variables (default: inferred)");
  norm->add_option("--coefficients", coef, "coefficient field")->capture_default_str();

  auto* wf = app.add_subcommand("witt-finite", "Witt decomposition of a form with constant entries");
  wf->add_option("form", text, "e.g. \"[1,1] _|_ [0x2,1]\"")->required();
  wf->add_option("--field", field, "coefficient field")->capture_default_str();

  int degree = 2;
  auto* iso = app.add_subcommand("isotropy", "certificate or bounded witness search for a form");
  iso->add_option("form", text)->required();
  iso->add_option("--vars", vars, "comma separated variables (default: inferred)");
  iso->add_option("--degree-bound", degree)->capture_default_str();
  iso->add_option("--seed", cfg.seed)->capture_default_str();

  std::size_t max_size = 4;
  auto* vc = app.add_subcommand("verify-context", "check the tightness claims on a context file");
  vc->add_option("context", file, "JSON {dim_V, U_basis, P_list}")->required();
  vc->add_option("--max-size", max_size)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.exec = serial ? Exec::Serial : Exec::Parallel;
    if (app.got_subcommand("list")) {
      for (const auto& n : scenario_names()) std::cout << n << "\n";
      return 0;
    }
    if (run->parsed()) {
      cfg.field = FiniteField::from_spec(field);
      if (scenario.empty() == file.empty()) throw Error(ErrorCode::InvalidArgument, "give a scenario name or --file");
      const Report r = file.empty() ? run_scenario(scenario, cfg) : run_scenario_file(read_json(file), cfg);
      emit(format == "json" ? r.to_json().dump(2) + "\n" : r.to_text(), out);
      return r.exit_code();
    }
    if (norm->parsed()) {
      const RingPtr ring = ring_for(text, vars, coef);
      const SymbolSum nf = normalize(parse_symbol_sum(text, ring));
      Json j;
      j["normal_form"] = nf.serialize();
      j["text"] = nf.empty() ? "0" : nf.to_string();
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (wf->parsed()) {
      const RingPtr ring = make_ring({}, FiniteField::from_spec(field));
      const WittClassFinite w = witt_decompose_finite(parse_form(text, ring));
      Json j;
      j["dimension"] = w.dimension;
      j["witt_index"] = w.witt_index;
      j["dim_anisotropic"] = w.dim_anisotropic;
      j["arf"] = w.arf;
      j["arf_in_artin_schreier_image"] = w.arf_in_artin_schreier_image;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (iso->parsed()) {
      const RingPtr ring = ring_for(text, vars, "2");
      const QuadraticForm f = parse_form(text, ring);
      Decision d = value_class_certificate(f, MonomialValuation(ring));
      if (!d.is_certified()) {
        IsotropyOptions o;
        o.degree_bound = degree;
        o.seed = cfg.seed;
        d = isotropy_search(f, o);
      }
      std::cout << d.to_json().dump(2) << "\n";
      return 0;
    }
    if (vc->parsed()) {
      const auto ctx = tight::TightContext::from_json(read_json(file));
      const auto prep = tight::verify_prep(ctx, max_size), ladder = tight::verify_ladder(ctx, max_size);
      Json j;
      j["context"] = ctx.to_json();
      j["prep"] = prep.to_json();
      j["ladder"] = ladder.to_json();
      std::cout << j.dump(2) << "\n";
      return prep.violations + ladder.violations == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
