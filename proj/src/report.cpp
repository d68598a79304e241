#include "pfister/report.hpp"

#include <sstream>

#include "pfister/error.hpp"

namespace pfister {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::Certified: return "certified";
    case Provenance::Evidence: return "evidence";
    case Provenance::TheoremCited: return "theorem-cited";
  }
  return "computed";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "computed") return Provenance::Computed;
  if (s == "certified") return Provenance::Certified;
  if (s == "evidence") return Provenance::Evidence;
  if (s == "theorem-cited") return Provenance::TheoremCited;
  throw Error(ErrorCode::ParseError, "unknown provenance '" + s + "'");
}

Json Claim::to_json() const {
  Json j;
  j["id"] = id;
  j["statement"] = statement;
  j["provenance"] = to_string(provenance);
  j["status"] = provenance == Provenance::TheoremCited ? (passed ? "cited" : "premises-failed") : (passed ? "pass" : "fail");
  j["premises"] = premises;
  j["detail"] = detail;
  return j;
}

Claim Claim::from_json(const Json& j) {
  Claim c;
  c.id = j.at("id").get<std::string>();
  c.statement = j.at("statement").get<std::string>();
  c.provenance = provenance_from_string(j.at("provenance").get<std::string>());
  const auto status = j.at("status").get<std::string>();
  c.passed = status == "pass" || status == "cited";
  c.premises = j.at("premises").get<std::vector<std::string>>();
  c.detail = j.at("detail");
  return c;
}

bool Claim::operator==(const Claim& o) const {
  return id == o.id && statement == o.statement && provenance == o.provenance && passed == o.passed &&
         premises == o.premises && detail == o.detail;
}

Claim& Report::add(std::string id, std::string statement, Provenance p, bool passed, Json detail) {
  if (p == Provenance::TheoremCited) throw Error(ErrorCode::InvalidArgument, "use cite() for theorem-cited lines");
  claims_.push_back(Claim{std::move(id), std::move(statement), p, passed, {}, std::move(detail)});
  return claims_.back();
}

Claim& Report::cite(std::string id, std::string statement, std::vector<std::string> premises, Json detail) {
  bool all = true;
  for (const auto& p : premises) {
    const Claim* c = find(p);
    if (!c) throw Error(ErrorCode::InvalidArgument, "unknown premise '" + p + "'");
    all &= c->passed;
  }
  claims_.push_back(
      Claim{std::move(id), std::move(statement), Provenance::TheoremCited, all, std::move(premises), std::move(detail)});
  return claims_.back();
}

const Claim* Report::find(const std::string& id) const {
  for (const auto& c : claims_)
    if (c.id == id) return &c;
  return nullptr;
}

bool Report::ok() const {
  for (const auto& c : claims_)
    if (c.provenance != Provenance::TheoremCited && !c.passed) return false;
  return true;
}

Json Report::to_json() const {
  Json j;
  j["scenario"] = scenario_;
  j["parameters"] = parameters_;
  Json cs = Json::array();
  for (const auto& c : claims_) cs.push_back(c.to_json());
  j["claims"] = cs;
  j["notes"] = notes_;
  j["ok"] = ok();
  return j;
}

Report Report::from_json(const Json& j) {
  Report r(j.at("scenario").get<std::string>(), j.at("parameters"));
  for (const auto& c : j.at("claims")) r.claims_.push_back(Claim::from_json(c));
  r.notes_ = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "scenario " << scenario_ << " " << parameters_.dump() << "\n";
  for (const auto& c : claims_) {
    const char* status = c.provenance == Provenance::TheoremCited ? (c.passed ? "CITED" : "PREMISES-FAILED")
                                                                  : (c.passed ? "PASS" : "FAIL");
    os << "[" << status << "] (" << to_string(c.provenance) << ") " << c.id << ": " << c.statement << "\n";
    if (!c.passed && c.detail.contains("point")) os << "    refuting point " << c.detail["point"].dump() << "\n";
  }
  for (const auto& n : notes_) os << "note: " << n << "\n";
  os << (ok() ? "OK" : "FAILED") << "\n";
  return os.str();
}

bool Report::operator==(const Report& o) const {
  return scenario_ == o.scenario_ && parameters_ == o.parameters_ && claims_ == o.claims_ && notes_ == o.notes_;
}

}  // namespace pfister
