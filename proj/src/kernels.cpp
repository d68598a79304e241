#include "pfister/kernels.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>

#include "pfister/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pfister::kernels {

namespace {
constexpr std::uint64_t kChunk = 1u << 14;
}  // namespace

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::optional<std::uint64_t> first_hit_serial(std::uint64_t begin, std::uint64_t end,
                                              const std::function<bool(std::uint64_t)>& hit) {
  for (std::uint64_t i = begin; i < end; ++i)
    if (hit(i)) return i;
  return std::nullopt;
}

std::optional<std::uint64_t> first_hit_parallel(std::uint64_t begin, std::uint64_t end,
                                                const std::function<bool(std::uint64_t)>& hit) {
#ifdef _OPENMP
  // Chunks are scanned in order so an early hit stops the search; inside a
  // chunk the minimum is taken so the answer matches the serial scan.
  for (std::uint64_t lo = begin; lo < end;) {
    const std::uint64_t hi = lo + std::min<std::uint64_t>(end - lo, kChunk * static_cast<std::uint64_t>(max_threads()));
    std::atomic<std::uint64_t> best{hi};
    const auto count = static_cast<std::int64_t>(hi - lo);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t off = 0; off < count; ++off) {
      const std::uint64_t i = lo + static_cast<std::uint64_t>(off);
      if (i >= best.load(std::memory_order_relaxed)) continue;
      if (hit(i)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
      }
    }
    if (best.load() < hi) return best.load();
    lo = hi;
  }
  return std::nullopt;
#else
  return first_hit_serial(begin, end, hit);
#endif
}

std::optional<std::uint64_t> first_hit(std::uint64_t begin, std::uint64_t end,
                                       const std::function<bool(std::uint64_t)>& hit, Exec exec) {
  return exec == Exec::Serial ? first_hit_serial(begin, end, hit) : first_hit_parallel(begin, end, hit);
}

void decode_vector(std::uint64_t idx, int k, std::size_t n, FiniteField::Element* out) {
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t shift = static_cast<std::size_t>(k) * j;
    out[j] = shift < 64 ? static_cast<FiniteField::Element>((idx >> shift) & mask) : 0;
  }
}

std::optional<std::uint64_t> find_isotropic(const FiniteForm& phi, bool allow_radical, Exec exec) {
  const std::size_t n = phi.dimension();
  if (n == 0) return std::nullopt;
  if (n > kMaxDenseDim) throw Error(ErrorCode::InvalidArgument, "form too large for exhaustive search");
  const int k = phi.field().degree();
  const std::size_t bits = static_cast<std::size_t>(k) * n;
  const std::uint64_t end = bits >= 62 ? (std::uint64_t{1} << 62) : (std::uint64_t{1} << bits);
  auto hit = [&](std::uint64_t idx) {
    std::array<FiniteField::Element, kMaxDenseDim> x{};
    decode_vector(idx, k, n, x.data());
    if (phi.value(x.data()) != 0) return false;
    return allow_radical || !phi.in_radical(x.data());
  };
  auto r = first_hit(1, end, hit, exec);
  if (!r && bits >= 62)
    throw Error(ErrorCode::InvalidArgument, "exhaustive search range exceeded without a decision");
  return r;
}

void IsoScan::masks(std::uint64_t idx, std::uint64_t* out) const {
  const std::uint64_t full = num_monomials >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_monomials) - 1;
  if (exhaustive) {
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t shift = num_monomials * j;
      out[j] = shift < 64 ? (idx >> shift) & full : 0;
    }
  } else {
    for (std::size_t j = 0; j < dim; ++j) out[j] = splitmix64(seed ^ splitmix64(idx * 131 + j)) & full;
  }
}

bool IsoScan::passes(std::uint64_t idx) const {
  std::array<std::uint64_t, kMaxDenseDim> m{};
  masks(idx, m.data());
  bool nonzero = false;
  for (std::size_t j = 0; j < dim; ++j) nonzero |= m[j] != 0;
  if (!nonzero) return false;
  std::array<FiniteField::Element, kMaxDenseDim> x{};
  for (std::size_t p = 0; p < num_points; ++p) {
    const FiniteField::Element* mv = monomial_values.data() + p * num_monomials;
    for (std::size_t j = 0; j < dim; ++j) {
      FiniteField::Element acc = 0;
      for (std::uint64_t bitsleft = m[j]; bitsleft; bitsleft &= bitsleft - 1)
        acc ^= mv[std::countr_zero(bitsleft)];
      x[j] = acc;
    }
    const FiniteField::Element* c = coef.data() + p * dim * dim;
    FiniteField::Element q = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      FiniteField::Element row = 0;
      for (std::size_t j = i; j < dim; ++j) {
        const auto cij = c[i * dim + j];
        if (cij && x[j]) row ^= field.mul(cij, x[j]);
      }
      q ^= field.mul(x[i], row);
    }
    if (q != 0) return false;
  }
  return true;
}

std::optional<std::uint64_t> scan_serial(const IsoScan& s, std::uint64_t begin, std::uint64_t end) {
  return first_hit_serial(begin, end, [&](std::uint64_t i) { return s.passes(i); });
}

std::optional<std::uint64_t> scan_parallel(const IsoScan& s, std::uint64_t begin, std::uint64_t end) {
  return first_hit_parallel(begin, end, [&](std::uint64_t i) { return s.passes(i); });
}

}  // namespace pfister::kernels
