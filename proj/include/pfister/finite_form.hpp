#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfister/finite_field.hpp"
#include "pfister/quadform.hpp"

namespace pfister {

enum class Exec { Serial, Parallel };

// Quadratic form over F_q given by upper triangular coefficients:
// q(x) = sum_{i<=j} c_ij x_i x_j.
class FiniteForm {
 public:
  using Element = FiniteField::Element;

  FiniteForm(FiniteField field, std::size_t n);

  const FiniteField& field() const { return field_; }
  std::size_t dimension() const { return n_; }
  Element coef(std::size_t i, std::size_t j) const { return c_[i * n_ + j]; }
  void set_coef(std::size_t i, std::size_t j, Element v) { c_[i * n_ + j] = v; }

  Element value(const Element* x) const;
  Element polar(const Element* x, const Element* y) const;
  // polar(x, e_j) for every j.
  void polar_row(const Element* x, Element* out) const;
  bool in_radical(const Element* x) const;

  // Restriction to the span of the given vectors.
  FiniteForm restrict_to(const std::vector<std::vector<Element>>& basis) const;

 private:
  FiniteField field_;
  std::size_t n_;
  std::vector<Element> c_;
};

struct FiniteBlock {
  bool unary = false;
  FiniteField::Element a = 0, b = 0, scale = 1;
};

struct FiniteBlockForm {
  FiniteField field;
  std::vector<FiniteBlock> blocks;

  std::size_t dimension() const;
  FiniteForm to_dense() const;
  std::string to_string() const;
};

// Specializes every entry at the point. Poles and zero scales (which would
// make a binary block degenerate) throw PoleAtPoint.
FiniteBlockForm specialize(const QuadraticForm& phi, const std::vector<FiniteField::Element>& point,
                           const FiniteField& target);

struct WittClassFinite {
  std::size_t dimension = 0;
  std::size_t dim_anisotropic = 0;
  std::size_t witt_index = 0;
  FiniteField::Element arf = 0;
  bool arf_in_artin_schreier_image = true;
};

// Classification of nonsingular forms over F_q by dimension and Arf invariant.
WittClassFinite witt_decompose_finite(const FiniteBlockForm& phi);
// Same for a form whose entries are constants of a finite coefficient field.
WittClassFinite witt_decompose_finite(const QuadraticForm& phi);

// Exact Witt index by repeatedly splitting off hyperbolic planes spanned by an
// isotropic non-radical vector found by exhaustive search. Works for singular
// forms too; needs q^n <= 2^62 unless an isotropic vector turns up early.
std::size_t exhaustive_witt_index(const FiniteForm& phi, Exec exec = Exec::Parallel);
bool exhaustive_isotropic(const FiniteForm& phi, Exec exec = Exec::Parallel);

}  // namespace pfister
