#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfister/field_element.hpp"

namespace pfister {

// Element of Gamma = Z^m, ordered lexicographically with the last coordinate
// most significant.
struct GammaValue {
  std::vector<long> comps;

  bool operator==(const GammaValue& o) const { return comps == o.comps; }
  bool operator<(const GammaValue& o) const;
  GammaValue operator+(const GammaValue& o) const;
  GammaValue operator-(const GammaValue& o) const;
  bool is_zero() const;
  bool is_negative() const;
  std::string to_string() const;
};

// Class in Gamma / 2 Gamma, bit i = parity of coordinate i.
struct GammaClass {
  std::uint32_t bits = 0;
  bool operator==(const GammaClass& o) const { return bits == o.bits; }
  bool operator<(const GammaClass& o) const { return bits < o.bits; }
  GammaClass operator+(const GammaClass& o) const { return {bits ^ o.bits}; }
  std::string to_string(std::size_t m) const;
};

// nu(prod x_i^{e_i}) = (-e_1, ..., -e_m), extended to F_{2^k}(x) through the
// valuation-minimal (leading) terms. Residue field F_{2^k}.
class MonomialValuation {
 public:
  explicit MonomialValuation(RingPtr ring);
  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return ring_->num_vars(); }

  GammaValue value(const FieldElement& f) const;
  GammaClass value_mod2(const FieldElement& f) const;
  GammaClass class_of(const GammaValue& g) const;

 private:
  RingPtr ring_;
};

GammaValue valuation(const FieldElement& f, const MonomialValuation& v);
GammaClass valuation_mod2(const FieldElement& f, const MonomialValuation& v);

}  // namespace pfister
