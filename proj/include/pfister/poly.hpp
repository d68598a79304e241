#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfister/finite_field.hpp"

namespace pfister {

inline constexpr std::size_t kMaxVars = 10;
using Exponents = std::array<std::uint16_t, kMaxVars>;

// Coefficient field plus variable names of F_{2^k}(x_1, ..., x_m).
struct Ring {
  FiniteField field;
  std::vector<std::string> variables;

  std::size_t num_vars() const { return variables.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool operator==(const Ring& o) const { return field == o.field && variables == o.variables; }
};
using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, FiniteField field = FiniteField::standard(1));
// Throws RingMismatch unless both rings describe the same field.
void require_same_ring(const RingPtr& a, const RingPtr& b);

// Term order: lexicographic comparing the last variable first. This is the
// order under which the monomial valuation is read off leading terms.
bool exps_less(const Exponents& a, const Exponents& b);
Exponents exps_add(const Exponents& a, const Exponents& b);
bool exps_divides(const Exponents& a, const Exponents& b);
Exponents exps_sub(const Exponents& a, const Exponents& b);

class Poly {
 public:
  using Element = FiniteField::Element;
  struct Term {
    Exponents exps;
    Element coef;
    bool operator==(const Term& o) const { return exps == o.exps && coef == o.coef; }
  };

  explicit Poly(RingPtr ring);
  static Poly constant(RingPtr ring, Element c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, const Exponents& exps, Element c = 1);
  // Terms may be unsorted and repeated; they are combined.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const FiniteField& field() const { return ring_->field; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Largest term under the term order.
  const Term& leading() const;
  int degree_in(std::size_t var) const;
  int total_degree() const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const { return *this + o; }
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(Element c) const;
  Poly mul_term(const Exponents& e, Element c) const;
  Poly pow(unsigned e) const;
  // Divides by the leading coefficient.
  Poly monic() const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // A total order used for canonical sorting.
  bool operator<(const Poly& o) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;  // ascending under exps_less, nonzero coefficients
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

// Multivariate division by a single divisor: a = q*b + r with no term of r
// divisible by the leading term of b.
DivMod divmod(const Poly& a, const Poly& b);
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Value of p at a point of F_{2^k}^m. Coefficients must lie in F_2 or in
// exactly this field.
FiniteField::Element evaluate(const Poly& p, const std::vector<FiniteField::Element>& point,
                              const FiniteField& target);

}  // namespace pfister
