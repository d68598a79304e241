#pragma once

// Brute-force references used to freeze expected values. They only rely on
// shift-and-reduce field multiplication, not on the library's algorithms.

#include <cstdint>
#include <vector>

#include "pfister/finite_field.hpp"
#include "pfister/finite_form.hpp"

namespace oracle {

using pfister::FiniteBlock;
using pfister::FiniteField;

inline std::uint32_t block_value(const FiniteField& f, const FiniteBlock& b, std::uint32_t x, std::uint32_t y) {
  if (b.unary) return f.mul_slow(b.a, f.mul_slow(x, x));
  const std::uint32_t inner = f.mul_slow(b.a, f.mul_slow(x, x)) ^ f.mul_slow(x, y) ^ f.mul_slow(b.b, f.mul_slow(y, y));
  return f.mul_slow(b.scale, inner);
}

// Number of v (including 0) with q(v) = 0.
inline std::uint64_t count_zeros(const FiniteField& f, const std::vector<FiniteBlock>& blocks) {
  std::size_t coords = 0;
  for (const auto& b : blocks) coords += b.unary ? 1 : 2;
  const std::uint32_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < coords; ++i) total *= q;
  std::uint64_t zeros = 0;
  std::vector<std::uint32_t> v(coords);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (auto& c : v) {
      c = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
    std::uint32_t val = 0;
    std::size_t pos = 0;
    for (const auto& b : blocks) {
      if (b.unary) {
        val ^= block_value(f, b, v[pos], 0);
        pos += 1;
      } else {
        val ^= block_value(f, b, v[pos], v[pos + 1]);
        pos += 2;
      }
    }
    zeros += val == 0;
  }
  return zeros;
}

// A nonsingular form of dimension 2m over F_q has q^{2m-1} + e (q^m - q^{m-1})
// zeros, with e = 1 exactly when it is hyperbolic.
inline bool hyperbolic_by_count(const FiniteField& f, const std::vector<FiniteBlock>& blocks) {
  const std::uint64_t q = f.order();
  const std::size_t m = blocks.size();
  std::uint64_t qm = 1;
  for (std::size_t i = 0; i < m; ++i) qm *= q;
  const std::uint64_t expect = qm * qm / q + qm - qm / q;
  return count_zeros(f, blocks) == expect;
}

inline std::size_t witt_index_by_count(const FiniteField& f, const std::vector<FiniteBlock>& blocks) {
  return hyperbolic_by_count(f, blocks) ? blocks.size() : blocks.size() - 1;
}

}  // namespace oracle
