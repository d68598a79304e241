#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfister/json.hpp"
#include "pfister/oracle.hpp"
#include "pfister/symbols.hpp"

namespace pfister {

enum class Tri { True, False, Unknown };
const char* to_string(Tri t);
Json to_json(Tri t);

// A finite set of n-fold Pfister forms with the structure that produces
// representatives for the subgroup it generates.
struct PfisterSet {
  enum class Kind { General, RightLinked, LeftLinked };

  Kind kind = Kind::General;
  std::size_t n = 0;
  std::vector<PfisterForm> forms;
  // RightLinked: forms[i] = <<betas[i]>> (x) phi.
  std::vector<FieldElement> betas;
  std::optional<PfisterForm> phi;
  // LeftLinked: forms[i] = <<b_slots>> (x) [1, alphas[i]].
  std::vector<FieldElement> alphas;
  std::vector<FieldElement> b_slots;
  // General: supplied by the caller, indexed by subset masks.
  std::optional<RepresentativeMap> supplied;

  static PfisterSet right_linked(std::vector<FieldElement> betas, PfisterForm phi);
  static PfisterSet left_linked(std::vector<FieldElement> alphas, std::vector<FieldElement> b_slots, RingPtr ring);
  static PfisterSet general(std::vector<PfisterForm> forms, std::optional<RepresentativeMap> reps = std::nullopt);

  std::size_t size() const { return forms.size(); }
  // Throws MissingRepresentatives for a General set without supplied ones.
  RepresentativeMap representatives() const;
  Json to_json() const;
};
const char* to_string(PfisterSet::Kind k);

struct SigmaInvariant {
  SymbolSum symbolic;
  SymbolSum normal_form;
  // (n+s-1)-fold form with the same Witt class, for right-linked sets.
  std::optional<PfisterForm> closed_form;
  // The bilinear identity behind the closed form held in W(F).
  bool closed_form_formal = false;
  Json evidence = Json::object();

  Json to_json() const;
};

struct LinkageOptions {
  // Specialization trials for evidence (0 disables).
  std::size_t trials = 200;
  SpecializationOptions spec;
  // Isotropy search on pi in the pair criterion (-1 disables).
  int search_degree = -1;
  IsotropyOptions search;
};

// Sum of representatives over the nonempty subsets; closed form for
// right-linked sets, with evidence that symbolic + closed form is hyperbolic.
SigmaInvariant sigma(const PfisterSet& set, const LinkageOptions& opts = {});

// Verdict of a linkage criterion together with the route that produced it.
struct LinkDecision {
  Tri linked = Tri::Unknown;
  std::string route;
  Json detail = Json::object();
  Json to_json() const;
};

// [[beta, alphas]] and [[gamma, alphas]] are left-linked iff
// [[gamma, beta, alphas]] is hyperbolic. The last alpha is the [1, .] slot.
LinkDecision pair_left_linkage_rightlinked(const FieldElement& beta, const FieldElement& gamma,
                                           const std::vector<FieldElement>& alphas, const LinkageOptions& opts = {});

// Pure subform of b (x) [[slots[0], quad]] with b = <<slots[1..]>>.
QuadraticForm pure_subform_of(const PfisterForm& p);

struct FaivreOptions {
  // Exact Witt index of phi' _|_ psi' at this many specializations.
  std::size_t corroboration_trials = 0;
  SpecializationOptions spec;
};
// Left-linked when the certified Witt index lower bound of phi' _|_ psi'
// reaches 2^{n-1} - 1; otherwise Unknown.
LinkDecision faivre_pair_criterion(const PfisterForm& phi, const PfisterForm& psi, const FaivreOptions& opts = {});

struct SubsetSigma {
  std::uint32_t mask = 0;
  Tri zero = Tri::Unknown;
  std::string route;
  std::string value;
};

struct LinkageReport {
  std::string name;
  std::size_t n = 0;
  std::size_t s = 0;
  Tri tight = Tri::Unknown;
  Tri strongly_tight = Tri::Unknown;
  Tri left_linked = Tri::Unknown;
  Tri right_linked = Tri::Unknown;
  Tri sigma_zero = Tri::Unknown;
  std::vector<SubsetSigma> subsets;
  std::vector<Json> pairwise;
  std::optional<SigmaInvariant> sigma;
  std::vector<Json> certificates;
  std::vector<std::string> notes;

  // Throws InvalidArgument if the verdicts contradict each other.
  void check_consistency() const;
  Json to_json() const;
};

// Sigma_{S'} for every subset of size > 1. Strongly tight iff all vanish.
LinkageReport strong_tightness_ladder(const PfisterSet& set, const LinkageOptions& opts = {});

// Direct check: the sum of every nonempty subset equals its representative
// in the calculus (so every element of the generated group is Pfister).
Tri subset_sums_are_single_symbols(const PfisterSet& set);

// Quaternion algebra [alpha, beta): x^2 + x = alpha, y^2 = beta.
struct QuaternionAlgebra {
  FieldElement alpha;
  FieldElement beta;
  std::string to_string() const;
};
// [[beta, alpha]]; throws ZeroScalar for beta = 0.
QPfisterSymbol norm_form(const QuaternionAlgebra& q);
PfisterForm norm_pfister(const QuaternionAlgebra& q);
// beta1[1, alpha1] _|_ beta2[1, alpha2] _|_ [1, alpha1 + alpha2].
QuadraticForm albert_form(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2);
// beta1[1, alpha1] _|_ beta2[1, alpha2] _|_ <1>.
QuadraticForm albert_prime_form(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2);

// Isotropy of Alb' (isotropic iff the norm forms are left-linked).
Decision insep_pair_test(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2, const IsotropyOptions& search = {},
                         bool run_search = true);
// Isotropy of Alb (isotropic iff the norm forms are right-linked).
Decision sep_pair_test(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2, const IsotropyOptions& search = {},
                       bool run_search = true);

// Norm forms of a triple and of the algebras similar to the products.
struct TripleRepresentatives {
  std::optional<PfisterForm> q12, q13, q23, q123;
};
struct TripleSigma {
  SigmaInvariant sigma;
  // Sigma_{phi1, phi23} when phi1 is left-linked to phi2 and to phi3.
  std::optional<SymbolSum> reduced;
  Json to_json() const;
};
TripleSigma triple_sigma(const PfisterForm& phi1, const PfisterForm& phi2, const PfisterForm& phi3,
                         const TripleRepresentatives& reps, const LinkageOptions& opts = {});

struct DimBoundReport {
  std::size_t s = 0;
  std::size_t summands = 0;
  std::size_t dimension = 0;
  std::size_t bound = 0;
  bool cancellation_formal = true;
  QuadraticForm representative;
  Json evidence = Json::object();
  bool ok() const { return dimension <= bound; }
  Json to_json() const;
};
// Builds the Witt-equivalent form obtained by merging the [1, *] halves of
// the 2-fold summands. With a left-linked pair (masks into reps) three
// summands cancel first and the bound drops by 6.
DimBoundReport dim_bound_check(const RepresentativeMap& reps, std::size_t s,
                               std::optional<std::pair<std::uint32_t, std::uint32_t>> left_linked_pair = std::nullopt,
                               const LinkageOptions& opts = {});

struct AnnihilatorReport {
  std::vector<LinkDecision> pairs;
  bool formal = false;
  std::optional<EvidenceReport> evidence;
  bool holds() const { return formal || evidence.has_value(); }
  Json to_json() const;
};
// sum_i <<alpha_i>> (x) psi + <<alpha_1 ... alpha_s>> (x) psi = 0 for pairwise
// left-linked forms. Throws HypothesesUnverified if a pair is not certified.
AnnihilatorReport annihilator_identity_check(const std::vector<FieldElement>& alphas, const PfisterForm& psi,
                                             const LinkageOptions& opts = {});

// Checks phi(M v) = psi(v) on a basis and on polar values; M is given by its
// columns in the block coordinates of phi.
bool verify_isometry(const QuadraticForm& phi, const QuadraticForm& psi,
                     const std::vector<std::vector<FieldElement>>& columns);

}  // namespace pfister
