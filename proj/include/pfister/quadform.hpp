#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pfister/field_element.hpp"

namespace pfister {

// <a>: a*u^2.
struct UnaryBlock {
  FieldElement a;
};
// scale * (a*u^2 + u*v + b*v^2). Keeping the scale separate preserves the
// tensor basis of b (x) [a, b]; the block is isometric to [scale*a, b/scale].
struct BinaryBlock {
  FieldElement a;
  FieldElement b;
  FieldElement scale;
};
using Block = std::variant<UnaryBlock, BinaryBlock>;

bool operator==(const UnaryBlock& x, const UnaryBlock& y);
bool operator==(const BinaryBlock& x, const BinaryBlock& y);

class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(std::vector<Block> blocks);

  static QuadraticForm unary(FieldElement a);
  static QuadraticForm binary(FieldElement a, FieldElement b);
  static QuadraticForm scaled_binary(FieldElement scale, FieldElement a, FieldElement b);
  static QuadraticForm hyperbolic_plane(const RingPtr& ring);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t dimension() const;
  bool empty() const { return blocks_.empty(); }
  RingPtr ring() const;
  bool has_unary() const;
  bool is_nonsingular() const { return !has_unary(); }

  std::string to_string() const;
  bool operator==(const QuadraticForm& o) const { return blocks_ == o.blocks_; }

 private:
  std::vector<Block> blocks_;
};

// Diagonal symmetric bilinear form <b_1, ..., b_n>.
class BilinearDiag {
 public:
  BilinearDiag() = default;
  explicit BilinearDiag(std::vector<FieldElement> entries);
  // <<s_1, ..., s_k>> = <1, s_1> (x) ... (x) <1, s_k>; entry i is the
  // product of the s_j with bit j set in i.
  static BilinearDiag pfister(const std::vector<FieldElement>& slots, const RingPtr& ring);

  const std::vector<FieldElement>& entries() const { return entries_; }
  std::size_t dimension() const { return entries_.size(); }
  // Recovers the slots if the entries have the product shape above.
  std::optional<std::vector<FieldElement>> pfister_slots() const;
  // All entries but the leading 1 of a Pfister form.
  BilinearDiag pure_part() const;
  std::string to_string() const;

 private:
  std::vector<FieldElement> entries_;
};

QuadraticForm orth_sum(const QuadraticForm& a, const QuadraticForm& b);
// c*phi with binary blocks normalized to [c*s*a, b/(c*s)].
QuadraticForm scale(const FieldElement& c, const QuadraticForm& phi);
// b (x) phi, keeping the tensor basis: b_i * (s[a,b]) = (b_i s)[a,b].
QuadraticForm tensor_bilinear(const BilinearDiag& b, const QuadraticForm& phi);
// phi(v) in block coordinates.
FieldElement evaluate(const QuadraticForm& phi, const std::vector<FieldElement>& v);
// Sum of a*b over binary blocks, defined modulo the Artin-Schreier image.
FieldElement arf(const QuadraticForm& phi);

struct WittBound {
  std::size_t hyperbolic_planes = 0;
  // Number of <0> summands split off (radical directions).
  std::size_t radical = 0;
  QuadraticForm residual;
};

// Sound lower bound on the Witt index by repeatedly splitting off hyperbolic
// planes found by elementary isometries.
WittBound witt_index_lower_bound(const QuadraticForm& phi);

// b' (x) [1,alpha] _|_ b (x) <beta> (x) [1,alpha] _|_ <1> for the Pfister form
// b (x) [[beta, alpha]].
QuadraticForm pure_subform(const BilinearDiag& b, const FieldElement& beta, const FieldElement& alpha);

// Multiset equality of blocks.
bool same_blocks_up_to_order(const QuadraticForm& x, const QuadraticForm& y);

}  // namespace pfister
