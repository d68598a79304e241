#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfister {

enum class ErrorCode {
  DivisionByZero,
  ZeroDenominator,
  ValuationOfZero,
  PoleAtPoint,
  RingMismatch,
  DimensionMismatch,
  SingularForm,
  InfiniteField,
  ZeroScalar,
  NotPfisterShape,
  ConstructionInapplicable,
  HypothesesUnverified,
  RefutedBySpecialization,
  MissingRepresentatives,
  NotTight,
  InvalidContext,
  ParseError,
  UnknownScenario,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when a specialization falsifies a claimed identity. The point is kept
// so the failure can be replayed.
class RefutedError : public Error {
 public:
  RefutedError(const std::string& what, std::vector<std::uint32_t> point, int field_degree,
               std::uint64_t trial)
      : Error(ErrorCode::RefutedBySpecialization, what),
        point_(std::move(point)),
        field_degree_(field_degree),
        trial_(trial) {}
  const std::vector<std::uint32_t>& point() const { return point_; }
  int field_degree() const { return field_degree_; }
  std::uint64_t trial() const { return trial_; }

 private:
  std::vector<std::uint32_t> point_;
  int field_degree_;
  std::uint64_t trial_;
};

}  // namespace pfister
