#pragma once

#include <cstdint>
#include <vector>

namespace pfister {

// Subspace of F_2^m (m <= 32) kept as a reduced echelon basis of bit vectors.
class F2Span {
 public:
  F2Span() = default;
  explicit F2Span(const std::vector<std::uint32_t>& generators);

  // Returns true if v was independent of the current span.
  bool insert(std::uint32_t v);
  std::uint32_t reduce(std::uint32_t v) const;
  bool contains(std::uint32_t v) const { return reduce(v) == 0; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::uint32_t>& basis() const { return basis_; }
  // All 2^rank elements, in a fixed order.
  std::vector<std::uint32_t> elements() const;

  F2Span intersect(const F2Span& o) const;
  F2Span sum(const F2Span& o) const;
  bool operator==(const F2Span& o) const { return basis_ == o.basis_; }

 private:
  std::vector<std::uint32_t> basis_;  // distinct pivots (highest bit), fully reduced, sorted descending
};

// Rank of a list of bit vectors over F_2.
std::size_t f2_rank(const std::vector<std::uint32_t>& vs);
std::size_t f2_rank64(std::vector<std::uint64_t> vs);

}  // namespace pfister
