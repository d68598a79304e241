#include "pfister/f2_linear.hpp"

#include <algorithm>
#include <bit>

namespace pfister {

F2Span::F2Span(const std::vector<std::uint32_t>& generators) {
  for (auto g : generators) insert(g);
}

std::uint32_t F2Span::reduce(std::uint32_t v) const {
  for (auto b : basis_) {
    const std::uint32_t pivot = std::bit_floor(b);
    if (v & pivot) v ^= b;
  }
  return v;
}

bool F2Span::insert(std::uint32_t v) {
  v = reduce(v);
  if (v == 0) return false;
  const std::uint32_t pivot = std::bit_floor(v);
  for (auto& b : basis_)
    if (b & pivot) b ^= v;
  basis_.push_back(v);
  std::sort(basis_.begin(), basis_.end(), std::greater<>());
  return true;
}

std::vector<std::uint32_t> F2Span::elements() const {
  std::vector<std::uint32_t> out;
  const std::size_t n = std::size_t{1} << basis_.size();
  out.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if ((mask >> i) & 1u) x ^= basis_[i];
    out.push_back(x);
  }
  return out;
}

F2Span F2Span::intersect(const F2Span& o) const {
  // Zassenhaus: rows (a|a) for a in A and (b|0) for b in B; rows of the
  // echelon form whose left half vanishes span A cap B.
  std::vector<std::uint64_t> rows;
  for (auto a : basis_) rows.push_back((std::uint64_t{a} << 32) | a);
  for (auto b : o.basis_) rows.push_back(std::uint64_t{b} << 32);
  std::vector<std::uint64_t> ech;
  for (auto r : rows) {
    for (auto e : ech)
      if (r & std::bit_floor(e)) r ^= e;
    if (r == 0) continue;
    for (auto& e : ech)
      if (e & std::bit_floor(r)) e ^= r;
    ech.push_back(r);
  }
  F2Span out;
  for (auto e : ech)
    if ((e >> 32) == 0) out.insert(static_cast<std::uint32_t>(e));
  return out;
}

F2Span F2Span::sum(const F2Span& o) const {
  F2Span out = *this;
  for (auto b : o.basis_) out.insert(b);
  return out;
}

std::size_t f2_rank(const std::vector<std::uint32_t>& vs) { return F2Span(vs).rank(); }

std::size_t f2_rank64(std::vector<std::uint64_t> vs) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] == 0) continue;
    ++rank;
    const std::uint64_t pivot = std::bit_floor(vs[i]);
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[j] & pivot) vs[j] ^= vs[i];
  }
  return rank;
}

}  // namespace pfister
