#pragma once

#include <string>
#include <vector>

#include "pfister/json.hpp"

namespace pfister {

// How a claim was established. Theorem-cited lines restate a result that is
// not computed here; their premises are other claims of the same report.
enum class Provenance { Computed, Certified, Evidence, TheoremCited };
const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct Claim {
  std::string id;
  std::string statement;
  Provenance provenance = Provenance::Computed;
  bool passed = false;
  std::vector<std::string> premises;
  Json detail = Json::object();

  Json to_json() const;
  static Claim from_json(const Json& j);
  bool operator==(const Claim& o) const;
};

class Report {
 public:
  Report() = default;
  Report(std::string scenario, Json parameters) : scenario_(std::move(scenario)), parameters_(std::move(parameters)) {}

  Claim& add(std::string id, std::string statement, Provenance p, bool passed, Json detail = Json::object());
  // Passes when every premise passed.
  Claim& cite(std::string id, std::string statement, std::vector<std::string> premises, Json detail = Json::object());
  void note(std::string text) { notes_.push_back(std::move(text)); }

  const std::string& scenario() const { return scenario_; }
  const std::vector<Claim>& claims() const { return claims_; }
  const Claim* find(const std::string& id) const;
  // Every claim that is not theorem-cited passed.
  bool ok() const;
  int exit_code() const { return ok() ? 0 : 1; }

  Json to_json() const;
  static Report from_json(const Json& j);
  std::string to_text() const;
  bool operator==(const Report& o) const;

 private:
  std::string scenario_;
  Json parameters_ = Json::object();
  std::vector<Claim> claims_;
  std::vector<std::string> notes_;
};

}  // namespace pfister
