#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pfister/quadform.hpp"

namespace pfister {

// Quadratic Pfister form <<slots>> (x) [1, quad], written [[slots, quad]].
struct PfisterForm {
  std::vector<FieldElement> slots;
  FieldElement quad;

  std::size_t fold() const { return slots.size() + 1; }
  const RingPtr& ring() const { return quad.ring(); }
  std::string to_string() const;
  bool operator==(const PfisterForm& o) const { return slots == o.slots && quad == o.quad; }
};

// ((e_1, ..., e_n)) = [[e_1, ..., e_{n-1}, e_1 e_2 ... e_n]]; symmetric and
// multi-additive in the entries.
class QPfisterSymbol {
 public:
  explicit QPfisterSymbol(std::vector<FieldElement> entries);
  static QPfisterSymbol from_pfister(const PfisterForm& p);

  const std::vector<FieldElement>& entries() const { return entries_; }
  std::size_t fold() const { return entries_.size(); }
  const RingPtr& ring() const { return entries_.front().ring(); }
  bool has_zero_entry() const;
  PfisterForm to_pfister() const;
  std::string to_string() const;

  // Equality up to permutation of the entries.
  bool operator==(const QPfisterSymbol& o) const;
  std::vector<FieldElement> sorted_entries() const;

 private:
  std::vector<FieldElement> entries_;
};

// Expansion into blocks; a symbol with a zero entry expands to the hyperbolic
// form of dimension 2^n.
QuadraticForm expand(const PfisterForm& p);
QuadraticForm expand(const QPfisterSymbol& s);

// Formal sum of n-fold symbols with F_2 coefficients.
class SymbolSum {
 public:
  explicit SymbolSum(std::size_t fold) : fold_(fold) {}
  SymbolSum(std::size_t fold, std::vector<QPfisterSymbol> terms);

  std::size_t fold() const { return fold_; }
  const std::vector<QPfisterSymbol>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool is_normalized() const { return normalized_; }

  SymbolSum& operator+=(const QPfisterSymbol& s);
  SymbolSum& operator+=(const SymbolSum& o);
  SymbolSum operator+(const SymbolSum& o) const;

  // Orthogonal sum of the expansions (for specialization checks).
  QuadraticForm expand() const;
  std::string to_string() const;
  // Sorted list of sorted entry tuples.
  std::vector<std::vector<std::string>> serialize() const;

  bool operator==(const SymbolSum& o) const { return fold_ == o.fold_ && terms_ == o.terms_; }

 private:
  friend SymbolSum normalize(const SymbolSum& s);
  std::size_t fold_;
  std::vector<QPfisterSymbol> terms_;
  bool normalized_ = false;
};

// Splits an entry into F_2-independent atoms: every term c*m of the numerator
// contributes (w^j m)/den for each bit j of c.
std::vector<FieldElement> atoms_of(const FieldElement& e);

// Canonical form under multi-additivity, symmetry and the kill rules (zero
// entry; equal entries or a square entry for n >= 2; dependent valuation
// parities among n-1 Laurent-monomial atoms; Artin-Schreier reduction of
// Laurent-monomial atoms for n = 1), followed by cancellation in pairs.
SymbolSum normalize(const SymbolSum& s);
bool is_formally_hyperbolic(const SymbolSum& s);

// Sound test for the hyperbolicity of a Pfister form: a metabolic bilinear
// part, or a sub-Pfister divisor whose symbol normalizes to zero.
bool pfister_formally_hyperbolic(const PfisterForm& p);

// For a family psi_i = ((a_j : j != i)), i = 0..n, with distinct a_j: the
// single symbol ((a_j for j not in I, a_{i0} + a_i for i in I \ {i0}))
// equivalent to sum_{i in I} psi_i, where i0 = min I. Throws
// ConstructionInapplicable for other families.
QPfisterSymbol subset_sum_symbol(const std::vector<QPfisterSymbol>& psis, const std::vector<std::size_t>& subset);
// The family psi_i = ((a_j : j != i)).
std::vector<QPfisterSymbol> leave_one_out_family(const std::vector<FieldElement>& a);

// Representatives indexed by nonempty subset bit masks.
using RepresentativeMap = std::map<std::uint32_t, PfisterForm>;
RepresentativeMap right_linked_representatives(const std::vector<FieldElement>& betas, const PfisterForm& phi);
RepresentativeMap left_linked_representatives(const std::vector<FieldElement>& alphas,
                                              const std::vector<FieldElement>& b_slots);

// Exact isotropy test for a diagonal bilinear form <b_1, ..., b_r>: the b_i
// are linearly dependent over the subfield of squares.
bool bilinear_isotropic(const std::vector<FieldElement>& entries);
bool bilinear_pfister_isotropic(const std::vector<FieldElement>& slots, const RingPtr& ring);

// Element of the bilinear Witt ring W(F) as a sum of <a>, using <a> + <a> = 0
// and <a c^2> = <a>.
class BilinearWittSum {
 public:
  explicit BilinearWittSum(RingPtr ring) : ring_(std::move(ring)) {}
  void add(const FieldElement& a);
  void add_pfister(const std::vector<FieldElement>& slots);
  void add(const BilinearWittSum& o);
  bool is_zero() const { return keys_.empty(); }
  std::size_t size() const { return keys_.size(); }
  bool operator==(const BilinearWittSum& o) const { return keys_ == o.keys_; }
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::map<std::string, FieldElement> keys_;  // square-class key -> representative
};

// Square class key: exact for Laurent monomials, sound in general.
FieldElement square_class_representative(const FieldElement& a);

}  // namespace pfister
