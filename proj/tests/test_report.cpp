#include <gtest/gtest.h>

#include "pfister/error.hpp"
#include "pfister/report.hpp"
#include "pfister/scenarios.hpp"

using namespace pfister;

namespace {

ScenarioConfig small() {
  ScenarioConfig c;
  c.trials = 20;
  c.samples = 5;
  c.pairs = 30;
  return c;
}

}  // namespace

TEST(Report, CitedClaimsFollowPremises) {
  Report r("t", Json::object());
  r.add("a", "holds", Provenance::Computed, true);
  r.add("b", "fails", Provenance::Certified, false);
  EXPECT_TRUE(r.cite("c", "cited", {"a"}).passed);
  EXPECT_FALSE(r.cite("d", "cited", {"a", "b"}).passed);
  EXPECT_THROW(r.cite("e", "cited", {"missing"}), Error);
  EXPECT_THROW(r.add("f", "x", Provenance::TheoremCited, true), Error);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Report, JsonRoundTrip) {
  const Report r = run_scenario("pairs", small());
  const Report back = Report::from_json(r.to_json());
  EXPECT_EQ(back, r);
  EXPECT_EQ(back.to_json().dump(), r.to_json().dump());
}

TEST(Report, DeterministicBytes) {
  for (const char* name : {"rels", "cross-criteria", "counter36"}) {
    const auto a = run_scenario(name, small()).to_json().dump();
    const auto b = run_scenario(name, small()).to_json().dump();
    EXPECT_EQ(a, b) << name;
  }
  ScenarioConfig serial = small();
  serial.exec = Exec::Serial;
  EXPECT_EQ(run_scenario("rels", small()).to_json(), run_scenario("rels", serial).to_json());
}

TEST(Report, UnknownScenario) { EXPECT_THROW(run_scenario("nope", small()), Error); }

TEST(Report, InjectedFalseClaimIsRefutedWithPoint) {
  const Json def = {{"scenario", "custom"},
                    {"variables", {"x", "y"}},
                    {"claims",
                     {{{"id", "true_claim"}, {"hyperbolic", "((x,y)) + ((y,x))"}},
                      {{"id", "false_claim"}, {"hyperbolic", "((x))"}}}}};
  const Report r = run_scenario_file(def, small());
  EXPECT_FALSE(r.ok());
  const Claim* good = r.find("true_claim.specializations");
  ASSERT_NE(good, nullptr);
  EXPECT_TRUE(good->passed);
  const Claim* bad = r.find("false_claim.specializations");
  ASSERT_NE(bad, nullptr);
  EXPECT_FALSE(bad->passed);
  EXPECT_EQ(bad->detail.at("point").size(), 2u);
  EXPECT_NE(r.to_text().find("refuting point"), std::string::npos);
}

TEST(Report, ScenarioNames) {
  const auto names = scenario_names();
  for (const char* n : {"rels", "multiadd", "main8", "counter36", "pairs", "ladder-fuzz", "updim", "triple"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
}
