#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pfister/finite_form.hpp"

// Search kernels, each in a serial reference version and an OpenMP version
// returning the same (smallest) index.
namespace pfister::kernels {

inline constexpr std::size_t kMaxDenseDim = 128;

bool openmp_enabled();
int max_threads();

// Smallest i in [begin, end) with hit(i); hit must be thread safe.
std::optional<std::uint64_t> first_hit_serial(std::uint64_t begin, std::uint64_t end,
                                              const std::function<bool(std::uint64_t)>& hit);
std::optional<std::uint64_t> first_hit_parallel(std::uint64_t begin, std::uint64_t end,
                                                const std::function<bool(std::uint64_t)>& hit);
std::optional<std::uint64_t> first_hit(std::uint64_t begin, std::uint64_t end,
                                       const std::function<bool(std::uint64_t)>& hit, Exec exec);

// Vector number idx of F_q^n: coordinate j is bits [k*j, k*j + k) of idx.
void decode_vector(std::uint64_t idx, int k, std::size_t n, FiniteField::Element* out);

// Smallest index of a vector with phi(v) = 0 that is not in the radical of
// the polar form (or any nonzero isotropic vector if allow_radical).
std::optional<std::uint64_t> find_isotropic(const FiniteForm& phi, bool allow_radical, Exec exec);

// Candidate scan for the function-field isotropy search. A candidate picks,
// for each coordinate, a subset of monomials (bit mask); it passes the filter
// when the form vanishes at every sample point.
struct IsoScan {
  FiniteField field = FiniteField::standard(16);
  std::size_t dim = 0;
  std::size_t num_monomials = 0;
  std::size_t num_points = 0;
  std::vector<FiniteField::Element> monomial_values;  // [p * num_monomials + t]
  std::vector<FiniteField::Element> coef;             // [p * dim * dim + i * dim + j], i <= j
  bool exhaustive = true;
  std::uint64_t seed = 0;

  void masks(std::uint64_t idx, std::uint64_t* out) const;
  bool passes(std::uint64_t idx) const;
};

std::optional<std::uint64_t> scan_serial(const IsoScan& s, std::uint64_t begin, std::uint64_t end);
std::optional<std::uint64_t> scan_parallel(const IsoScan& s, std::uint64_t begin, std::uint64_t end);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace pfister::kernels
