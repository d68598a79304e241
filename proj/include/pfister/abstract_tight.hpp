#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pfister/f2_linear.hpp"
#include "pfister/finite_form.hpp"
#include "pfister/json.hpp"

// Vectors of V = F_2^d are bit masks; P is stored as a bitset over V.
namespace pfister::tight {

constexpr int kMaxDim = 12;

class TightContext {
 public:
  // Validates 0 in P, P spans V and that each coset of U meets P at most once.
  static TightContext make(int dim, const std::vector<std::uint32_t>& u_generators,
                           const std::vector<std::uint32_t>& p_list);

  int dim() const { return dim_; }
  const F2Span& u() const { return u_; }
  bool in_p(std::uint32_t v) const { return in_p_[v] != 0; }
  // The element of P in v + U, or -1.
  std::int64_t p_rep(std::uint32_t v) const { return rep_[v]; }
  bool in_u(std::uint32_t v) const { return in_u_[v] != 0; }
  std::vector<std::uint32_t> p_list() const;

  Json to_json() const;
  static TightContext from_json(const Json& j);

 private:
  int dim_ = 0;
  F2Span u_;
  std::vector<std::uint8_t> in_p_;
  std::vector<std::uint8_t> in_u_;
  std::vector<std::int64_t> rep_;
};

bool is_tight(const TightContext& ctx, const std::vector<std::uint32_t>& s);
bool is_strongly_tight(const TightContext& ctx, const std::vector<std::uint32_t>& s);
// Sum over subsets S' of the P-representative of sum(S') + U. Throws NotTight.
std::uint32_t sigma_abstract(const TightContext& ctx, const std::vector<std::uint32_t>& s);
// Tight, and every proper subset strongly tight.
bool is_almost_strongly_tight(const TightContext& ctx, const std::vector<std::uint32_t>& s);

struct VerifyReport {
  std::uint64_t contexts = 0;
  std::uint64_t sets_checked = 0;
  std::uint64_t dependent_skipped = 0;
  std::uint64_t infeasible_skipped = 0;
  std::uint64_t violations = 0;
  // First violation, for replay.
  Json first_violation = nullptr;

  VerifyReport& operator+=(const VerifyReport& o);
  Json to_json() const;
};

// All subsets of P of size 2..max_size that are almost strongly tight:
// strongly tight iff Sigma_S = 0.
VerifyReport verify_prep(const TightContext& ctx, std::size_t max_size = 4);
// All tight subsets of size 2..max_size: strongly tight iff Sigma_{S'} = 0 for
// every S' of size > 1. Also checks monotonicity under taking subsets and
// Sigma_S in U when <S> has more than two elements.
VerifyReport verify_ladder(const TightContext& ctx, std::size_t max_size = 4);
// Both in one pass over the tight subsets.
std::pair<VerifyReport, VerifyReport> verify_both(const TightContext& ctx, std::size_t max_size = 4);

// All subspaces of F_2^d (as reduced bases) with dim <= max_dim or
// codim <= max_codim.
std::vector<std::vector<std::uint32_t>> subspaces(int d, int max_dim, int max_codim);

// Random P for (d, U): one candidate per coset, chosen according to a
// seed-dependent regime. Returns false if no spanning P was found.
bool sample_p(int d, const F2Span& u, std::uint64_t seed, std::vector<std::uint32_t>& p);

struct FuzzOptions {
  int max_dim_v = 5;
  int max_dim_u = 2;
  int max_codim_u = 2;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t max_set_size = 4;
  Exec exec = Exec::Parallel;
};
struct FuzzReport {
  VerifyReport prep;
  VerifyReport ladder;
  std::uint64_t configurations = 0;
  // Samples for which no spanning P was found.
  std::uint64_t unsampled = 0;
  Json to_json() const;
};
FuzzReport fuzz(const FuzzOptions& opts);

}  // namespace pfister::tight
