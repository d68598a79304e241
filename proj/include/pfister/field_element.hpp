#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfister/poly.hpp"

namespace pfister {

// Element num/den of F_{2^k}(x_1, ..., x_m). Invariant: gcd(num, den) = 1,
// den != 0 and the leading term of den (the valuation-minimal one) is monic.
class FieldElement {
 public:
  using Element = FiniteField::Element;

  explicit FieldElement(RingPtr ring);  // zero
  explicit FieldElement(Poly num);      // polynomial

  static FieldElement zero(RingPtr ring) { return FieldElement(std::move(ring)); }
  static FieldElement one(RingPtr ring);
  static FieldElement constant(RingPtr ring, Element c);
  static FieldElement variable(RingPtr ring, std::size_t index);
  static FieldElement variable(RingPtr ring, const std::string& name);

  const RingPtr& ring() const { return num_.ring(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  // c * x^e with e in Z^m.
  bool is_laurent_monomial() const { return num_.is_monomial() && den_.is_monomial(); }
  // Recognizes squares whose numerator and denominator only carry even
  // exponents; sufficient, and exact for Laurent monomials.
  bool is_obvious_square() const;
  // Square root of an obvious square (see above).
  std::optional<FieldElement> obvious_sqrt() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const { return *this + o; }
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement inverse() const;
  FieldElement pow(int e) const;
  FieldElement square() const { return *this * *this; }

  bool operator==(const FieldElement& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  // Canonical total order (denominator first, then numerator).
  bool operator<(const FieldElement& o) const;

  std::string to_string() const;

  friend FieldElement fe_normalize(Poly num, Poly den);

 private:
  FieldElement(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

FieldElement fe_normalize(Poly num, Poly den);

// Value at a point of F_{2^k}^m; throws PoleAtPoint when the denominator
// vanishes there.
FiniteField::Element specialize(const FieldElement& f, const std::vector<FiniteField::Element>& point,
                                const FiniteField& target);

FieldElement product(const std::vector<FieldElement>& xs, const RingPtr& ring);

}  // namespace pfister
