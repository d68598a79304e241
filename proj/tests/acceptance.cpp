// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "pfister/scenarios.hpp"

using namespace pfister;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

// Failed claim ids of a report.
std::string failures(const Report& r) {
  std::string out;
  for (const auto& c : r.claims())
    if (!c.passed) out += (out.empty() ? "" : ",") + c.id;
  return r.scenario() + " [" + out + "]";
}

Outcome relations() {
  Outcome o;
  ScenarioConfig cfg;
  cfg.field = FiniteField::standard(4);
  cfg.trials = 200;
  std::size_t identities = 0;
  for (const char* name : {"rels", "multiadd"}) {
    const Report r = run_scenario(name, cfg);
    require(o, r.ok(), failures(r));
    for (const auto& c : r.claims()) {
      if (c.id.ends_with(".specializations")) {
        ++identities;
        require(o, c.detail.value("passes", 0u) >= 200 && c.detail.value("cross_checked", 0u) >= 200,
                c.id + " has fewer than 200 cross-checked specializations");
      }
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(identities) + " identities";
  return o;
}

Outcome framework() {
  Outcome o;
  ScenarioConfig cfg;
  cfg.samples = 1000;
  const Report r = run_scenario("ladder-fuzz", cfg);
  require(o, r.ok(), failures(r));
  return o;
}

Outcome main8() {
  Outcome o;
  for (int n : {2, 3, 4}) {
    ScenarioConfig cfg;
    cfg.n = n;
    const Report r = run_scenario("main8", cfg);
    require(o, r.ok(), failures(r));
  }
  return o;
}

Outcome sep_closed_form() {
  Outcome o;
  for (int s : {2, 3, 4}) {
    ScenarioConfig cfg;
    cfg.n = 2;
    cfg.s = s;
    cfg.trials = 200;
    const Report r = run_scenario("counter36", cfg);
    const Claim* c = r.find("closed_form.specializations");
    require(o, c && c->passed && c->detail.value("passes", 0u) == 200, "s=" + std::to_string(s) + " closed form");
    const Claim* ind = r.find("induction_identity");
    require(o, ind && ind->passed, "induction identity");
    require(o, r.ok(), failures(r));
  }
  return o;
}

Outcome updim() {
  Outcome o;
  for (int s : {1, 2, 3, 4}) {
    ScenarioConfig cfg;
    cfg.s = s;
    const Report r = run_scenario("updim", cfg);
    require(o, r.ok(), failures(r));
    if (s >= 2) require(o, r.find("pair.sigma_zero") && r.find("pair.dimension"), "pair claims missing");
  }
  return o;
}

Outcome triple() {
  Outcome o;
  ScenarioConfig cfg;
  cfg.degree_bound = 2;
  const Report r = run_scenario("triple", cfg);
  require(o, r.ok(), failures(r));
  const Claim* m2 = r.find("alb.monice2");
  require(o, m2 && m2->passed && m2->detail.value("matrix_rank", 0u) == 2, "monice2 rank check");
  const Claim* e = r.find("over_E");
  require(o, e && e->provenance == Provenance::TheoremCited && e->passed, "cited conclusion premises");
  return o;
}

Outcome witt_kernel() {
  Outcome o;
  const Report r = run_scenario("witt-kernel", ScenarioConfig{});
  require(o, r.ok(), failures(r));
  return o;
}

Outcome cross_criteria() {
  Outcome o;
  ScenarioConfig cfg;
  cfg.pairs = 500;
  const Report r = run_scenario("cross-criteria", cfg);
  require(o, r.ok(), failures(r));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion all[] = {
      {1, "symbol relations hold formally and at 200 specializations over F_16", 10, relations},
      {2, "abstract framework: no violations for dim V <= 5", 60, framework},
      {3, "strongly tight family without common subform, n = 2, 3, 4", 30, main8},
      {4, "right-linked closed form for s = 2, 3, 4 and the induction identity", 0, sep_closed_form},
      {5, "dimension bounds and the vanishing Sigma configuration", 0, updim},
      {6, "triple realization with certified anisotropic Albert form", 0, triple},
      {7, "finite-field Witt kernel against exhaustive search over F_2 and F_4", 120, witt_kernel},
      {8, "pair criteria never contradict each other on 500 random pairs", 0, cross_criteria},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) require(o, false, "over the time budget");
    failed += !o.pass;
    std::printf("criterion %d: %s  %s (%.2fs)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.what, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
