#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfister/f2_linear.hpp"
#include "pfister/finite_form.hpp"
#include "pfister/json.hpp"
#include "pfister/symbols.hpp"
#include "pfister/valuation.hpp"

namespace pfister {

enum class Verdict { CertifiedAnisotropic, IsotropicWitness, Unknown };
const char* to_string(Verdict v);

class Decision {
 public:
  static Decision certified(std::string lemma, Json hypotheses, std::size_t matrix_rank);
  // Re-checks evaluate(phi, w) = 0 and w != 0; throws otherwise.
  static Decision witness(const QuadraticForm& phi, std::vector<FieldElement> w, Json evidence = Json::object());
  static Decision unknown(std::string reason, Json evidence = Json::object());

  Verdict verdict() const { return verdict_; }
  bool is_certified() const { return verdict_ == Verdict::CertifiedAnisotropic; }
  bool is_witness() const { return verdict_ == Verdict::IsotropicWitness; }
  bool is_unknown() const { return verdict_ == Verdict::Unknown; }
  const std::string& lemma() const { return lemma_; }
  const Json& hypotheses() const { return hypotheses_; }
  std::size_t matrix_rank() const { return matrix_rank_; }
  const std::vector<FieldElement>& witness_vector() const { return witness_; }

  // {verdict, lemma, hypotheses, matrix_rank, trials, seed, witness?}
  Json to_json() const;

 private:
  Verdict verdict_ = Verdict::Unknown;
  std::string lemma_;
  Json hypotheses_ = Json::object();
  std::size_t matrix_rank_ = 0;
  std::vector<FieldElement> witness_;
  std::uint64_t trials_ = 0;
  std::optional<std::uint64_t> seed_;
};

// Slots of the form [[beta_k, ..., beta_1]] in the order of the lemma:
// beta_1 is the [1, .] slot.
std::vector<FieldElement> monice_betas(const PfisterForm& p);
std::vector<FieldElement> monice_betas(const QPfisterSymbol& s);

// Certifies <<beta_k, ..., beta_2>> (x) [1, beta_1] anisotropic when
// nu(beta_1) < 0 and the classes of the nu(beta_i) mod 2 are independent.
Decision monice_certificate(const std::vector<FieldElement>& betas, const MonomialValuation& v);
// Span of the nu(beta_i) mod 2; throws HypothesesUnverified if the
// certificate does not apply.
F2Span value_set_mod2(const std::vector<FieldElement>& betas, const MonomialValuation& v);

struct ObstructionReport {
  bool established = false;
  std::vector<Decision> certificates;
  std::vector<F2Span> value_sets;
  F2Span intersection;
  Json to_json(std::size_t rank) const;
};
// No common 2-dimensional subform when the value sets meet only in 0.
ObstructionReport common_subform_obstruction(const std::vector<QPfisterSymbol>& psis, const MonomialValuation& v);

// alpha[1, beta] _|_ [1, gamma] is anisotropic when nu(beta) = nu(gamma) < 0
// and nu(alpha), nu(beta) are independent mod 2.
Decision monice2_certificate(const FieldElement& alpha, const FieldElement& beta, const FieldElement& gamma,
                             const MonomialValuation& v);

// Blockwise valuation argument: writing each binary block as c[1, d] with
// nu(d) < 0 and nu(d) not in 2 Gamma, and each unary block as <c>, the form is
// anisotropic when the sets of value classes of the blocks are disjoint.
Decision value_class_certificate(const QuadraticForm& phi, const MonomialValuation& v);

struct IsotropyOptions {
  int degree_bound = 2;
  std::uint64_t seed = 1;
  // Exhaustive when the candidate space has at most this many bits.
  int exhaustive_bits = 24;
  std::uint64_t random_samples = std::uint64_t{1} << 20;
  std::size_t sample_points = 3;
  Exec exec = Exec::Parallel;
};

// Bounded search for a nonzero vector with polynomial coordinates over F_2 of
// degree <= D, for D = 0, ..., degree_bound.
Decision isotropy_search(const QuadraticForm& phi, const IsotropyOptions& opts = {});

struct SpecializationOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  FiniteField field = FiniteField::standard(4);
  std::size_t max_attempts = 64;
  // Also run the exhaustive Witt index on the first few trials.
  std::size_t exhaustive_cross_checks = 0;
  Exec exec = Exec::Parallel;
};

struct EvidenceReport {
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t rejected = 0;
  std::size_t cross_checked = 0;
  std::uint64_t seed = 0;
  std::string field;
  Json to_json() const;
};

// Claim: phi is hyperbolic (Witt class 0). Every non-pole specialization must
// have Witt index dim/2; a failure throws RefutedError carrying the point.
EvidenceReport specialization_witt_evidence(const QuadraticForm& claim, const SpecializationOptions& opts = {});
EvidenceReport specialization_witt_evidence(const SymbolSum& claim, const SpecializationOptions& opts = {});

// Point used for trial t, attempt a.
std::vector<FiniteField::Element> sample_point(std::size_t num_vars, const FiniteField& f, std::uint64_t seed,
                                               std::uint64_t trial, std::uint64_t attempt);

}  // namespace pfister
