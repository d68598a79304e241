#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pfister {

// GF(2)[x] polynomial helpers on bit vectors (bit i = coefficient of x^i).
int gf2_degree(std::uint64_t p);
bool gf2_is_irreducible(std::uint32_t p);

// F_{2^k} for 1 <= k <= 16, elements are bit vectors reduced modulo an
// irreducible polynomial. Multiplication goes through log/antilog tables that
// are shared between copies.
class FiniteField {
 public:
  using Element = std::uint32_t;

  FiniteField(int k, std::uint32_t modulus);

  // The field with the default modulus for degree k; tables are cached.
  static FiniteField standard(int k);
  // Parses "2^k" or "F_q"/"q" with q a power of two.
  static FiniteField from_spec(const std::string& spec);

  int degree() const { return k_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return 1u << k_; }
  bool contains(Element a) const { return a < order(); }

  Element add(Element a, Element b) const { return a ^ b; }
  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;
  Element sqrt(Element a) const;
  Element square(Element a) const { return mul(a, a); }
  // Absolute trace to F_2.
  Element trace(Element a) const;
  // c is in {x^2 + x : x in F} exactly when its trace vanishes.
  bool in_artin_schreier_image(Element c) const { return trace(c) == 0; }
  Element generator() const { return tables_->generator; }

  std::string name() const;
  bool operator==(const FiniteField& o) const { return k_ == o.k_ && modulus_ == o.modulus_; }

  // Reference multiplication by shift-and-reduce, used to validate the tables.
  Element mul_slow(Element a, Element b) const;

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> exp;
    Element generator = 1;
  };
  static std::shared_ptr<const Tables> build_tables(int k, std::uint32_t modulus);
  static Element mul_reduce(Element a, Element b, int k, std::uint32_t modulus);

  int k_;
  std::uint32_t modulus_;
  std::shared_ptr<const Tables> tables_;
};

std::uint32_t default_modulus(int k);

}  // namespace pfister
