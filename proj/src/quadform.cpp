#include "pfister/quadform.hpp"

#include <algorithm>
#include <sstream>

#include "pfister/error.hpp"

namespace pfister {

bool operator==(const UnaryBlock& x, const UnaryBlock& y) { return x.a == y.a; }
bool operator==(const BinaryBlock& x, const BinaryBlock& y) {
  return x.a == y.a && x.b == y.b && x.scale == y.scale;
}

namespace {

const FieldElement& some_element(const Block& b) {
  return std::visit([](const auto& blk) -> const FieldElement& { return blk.a; }, b);
}

void check_block(const Block& b) {
  if (const auto* bin = std::get_if<BinaryBlock>(&b)) {
    require_same_ring(bin->a.ring(), bin->b.ring());
    require_same_ring(bin->a.ring(), bin->scale.ring());
    if (bin->scale.is_zero()) throw Error(ErrorCode::ZeroScalar, "binary block with zero scale");
  }
}

}  // namespace

QuadraticForm::QuadraticForm(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    check_block(b);
    require_same_ring(some_element(blocks_.front()).ring(), some_element(b).ring());
  }
}

QuadraticForm QuadraticForm::unary(FieldElement a) { return QuadraticForm({UnaryBlock{std::move(a)}}); }

QuadraticForm QuadraticForm::binary(FieldElement a, FieldElement b) {
  FieldElement one = FieldElement::one(a.ring());
  return QuadraticForm({BinaryBlock{std::move(a), std::move(b), std::move(one)}});
}

QuadraticForm QuadraticForm::scaled_binary(FieldElement scale, FieldElement a, FieldElement b) {
  return QuadraticForm({BinaryBlock{std::move(a), std::move(b), std::move(scale)}});
}

QuadraticForm QuadraticForm::hyperbolic_plane(const RingPtr& ring) {
  return binary(FieldElement::zero(ring), FieldElement::zero(ring));
}

std::size_t QuadraticForm::dimension() const {
  std::size_t d = 0;
  for (const auto& b : blocks_) d += std::holds_alternative<UnaryBlock>(b) ? 1 : 2;
  return d;
}

RingPtr QuadraticForm::ring() const {
  if (blocks_.empty()) return nullptr;
  return some_element(blocks_.front()).ring();
}

bool QuadraticForm::has_unary() const {
  return std::any_of(blocks_.begin(), blocks_.end(),
                     [](const Block& b) { return std::holds_alternative<UnaryBlock>(b); });
}

std::string QuadraticForm::to_string() const {
  if (blocks_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << " _|_ ";
    if (const auto* u = std::get_if<UnaryBlock>(&blocks_[i])) {
      os << '<' << u->a.to_string() << '>';
    } else {
      const auto& b = std::get<BinaryBlock>(blocks_[i]);
      if (!b.scale.is_one()) os << '<' << b.scale.to_string() << ">*";
      os << '[' << b.a.to_string() << ',' << b.b.to_string() << ']';
    }
  }
  return os.str();
}

BilinearDiag::BilinearDiag(std::vector<FieldElement> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) require_same_ring(entries_.front().ring(), e.ring());
}

BilinearDiag BilinearDiag::pfister(const std::vector<FieldElement>& slots, const RingPtr& ring) {
  std::vector<FieldElement> entries{FieldElement::one(ring)};
  for (const auto& s : slots) {
    const std::size_t n = entries.size();
    for (std::size_t i = 0; i < n; ++i) entries.push_back(entries[i] * s);
  }
  return BilinearDiag(std::move(entries));
}

std::optional<std::vector<FieldElement>> BilinearDiag::pfister_slots() const {
  const std::size_t n = entries_.size();
  if (n == 0 || (n & (n - 1)) != 0 || !entries_[0].is_one()) return std::nullopt;
  std::vector<FieldElement> slots;
  for (std::size_t bit = 1; bit < n; bit <<= 1) slots.push_back(entries_[bit]);
  for (std::size_t i = 1; i < n; ++i) {
    FieldElement p = FieldElement::one(entries_[0].ring());
    for (std::size_t j = 0; j < slots.size(); ++j)
      if ((i >> j) & 1u) p *= slots[j];
    if (p != entries_[i]) return std::nullopt;
  }
  return slots;
}

BilinearDiag BilinearDiag::pure_part() const {
  if (entries_.empty()) return *this;
  return BilinearDiag(std::vector<FieldElement>(entries_.begin() + 1, entries_.end()));
}

std::string BilinearDiag::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i].to_string();
  os << '>';
  return os.str();
}

QuadraticForm orth_sum(const QuadraticForm& a, const QuadraticForm& b) {
  std::vector<Block> blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  return QuadraticForm(std::move(blocks));
}

QuadraticForm scale(const FieldElement& c, const QuadraticForm& phi) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroScalar, "scaling by zero");
  std::vector<Block> out;
  for (const auto& blk : phi.blocks()) {
    if (const auto* u = std::get_if<UnaryBlock>(&blk)) {
      out.push_back(UnaryBlock{c * u->a});
    } else {
      const auto& b = std::get<BinaryBlock>(blk);
      const FieldElement s = c * b.scale;
      out.push_back(BinaryBlock{s * b.a, b.b / s, FieldElement::one(c.ring())});
    }
  }
  return QuadraticForm(std::move(out));
}

QuadraticForm tensor_bilinear(const BilinearDiag& bl, const QuadraticForm& phi) {
  std::vector<Block> out;
  for (const auto& e : bl.entries()) {
    if (e.is_zero()) throw Error(ErrorCode::ZeroScalar, "zero entry in bilinear form");
    for (const auto& blk : phi.blocks()) {
      if (const auto* u = std::get_if<UnaryBlock>(&blk)) {
        out.push_back(UnaryBlock{e * u->a});
      } else {
        const auto& b = std::get<BinaryBlock>(blk);
        out.push_back(BinaryBlock{b.a, b.b, e * b.scale});
      }
    }
  }
  return QuadraticForm(std::move(out));
}

FieldElement evaluate(const QuadraticForm& phi, const std::vector<FieldElement>& v) {
  if (v.size() != phi.dimension()) throw Error(ErrorCode::DimensionMismatch, "vector length != dim");
  if (phi.empty()) throw Error(ErrorCode::DimensionMismatch, "evaluating the zero form");
  FieldElement acc = FieldElement::zero(phi.ring());
  std::size_t pos = 0;
  for (const auto& blk : phi.blocks()) {
    if (const auto* u = std::get_if<UnaryBlock>(&blk)) {
      acc += u->a * v[pos].square();
      pos += 1;
    } else {
      const auto& b = std::get<BinaryBlock>(blk);
      const FieldElement& x = v[pos];
      const FieldElement& y = v[pos + 1];
      acc += b.scale * (b.a * x.square() + x * y + b.b * y.square());
      pos += 2;
    }
  }
  return acc;
}

FieldElement arf(const QuadraticForm& phi) {
  if (phi.empty()) throw Error(ErrorCode::DimensionMismatch, "Arf invariant of the zero form needs a ring");
  if (phi.has_unary()) throw Error(ErrorCode::SingularForm, "Arf invariant needs a nonsingular form");
  FieldElement acc = FieldElement::zero(phi.ring());
  for (const auto& blk : phi.blocks()) {
    const auto& b = std::get<BinaryBlock>(blk);
    acc += b.a * b.b;
  }
  return acc;
}

namespace {

struct Piece {
  Block block;
  bool unary;
  bool touched = false;
  // Normalized coordinates: the block is isometric to [x, y] for each listed
  // (x, y) pair; for a unary block x holds the entry.
  std::vector<std::pair<FieldElement, FieldElement>> reps;
};

Piece make_piece(const Block& blk) {
  Piece p{blk, std::holds_alternative<UnaryBlock>(blk), false, {}};
  if (p.unary) {
    const auto& u = std::get<UnaryBlock>(blk);
    p.reps.emplace_back(u.a, u.a);
  } else {
    const auto& b = std::get<BinaryBlock>(blk);
    const FieldElement ca = b.scale * b.a, b_c = b.b / b.scale;
    const FieldElement cb = b.scale * b.b, a_c = b.a / b.scale;
    p.reps = {{ca, b_c}, {b_c, ca}, {cb, a_c}, {a_c, cb}};
  }
  return p;
}

Piece normalized_binary(const FieldElement& x, const FieldElement& y) {
  Piece p = make_piece(BinaryBlock{x, y, FieldElement::one(x.ring())});
  p.touched = true;
  return p;
}

bool ratio_is_square(const FieldElement& x, const FieldElement& y) {
  if (x.is_zero() || y.is_zero()) return false;
  return x == y || (x / y).is_obvious_square();
}

// One rewrite step; returns false when nothing applies.
bool rewrite_once(std::vector<Piece>& ps, WittBound& out) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].unary) {
      if (ps[i].reps[0].first.is_zero()) {
        ps.erase(ps.begin() + static_cast<long>(i));
        ++out.radical;
        return true;
      }
    } else {
      const auto& [x, y] = ps[i].reps[0];
      if (x.is_zero() || y.is_zero()) {
        ps.erase(ps.begin() + static_cast<long>(i));
        ++out.hyperbolic_planes;
        return true;
      }
    }
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      Piece& p = ps[i];
      Piece& q = ps[j];
      if (p.unary && q.unary) {
        // <d> _|_ <d t^2> = <d> _|_ <0>.
        if (ratio_is_square(p.reps[0].first, q.reps[0].first)) {
          ps.erase(ps.begin() + static_cast<long>(j));
          ++out.radical;
          return true;
        }
      } else if (p.unary != q.unary) {
        // <d> _|_ [d t^2, y] = <d> _|_ H.
        const Piece& u = p.unary ? p : q;
        const Piece& b = p.unary ? q : p;
        for (const auto& [x, y] : b.reps) {
          if (ratio_is_square(u.reps[0].first, x)) {
            ps.erase(ps.begin() + static_cast<long>(p.unary ? j : i));
            ++out.hyperbolic_planes;
            return true;
          }
        }
      } else {
        // [x, y1] _|_ [x, y2] = H _|_ [x, y1 + y2], after rewriting
        // [x t^2, y] = [x, y t^2].
        for (const auto& [x1, y1] : p.reps) {
          for (const auto& [x2, y2] : q.reps) {
            if (!ratio_is_square(x2, x1)) continue;
            const auto t = (x2 / x1).obvious_sqrt();
            if (t) {
              Piece merged = normalized_binary(x1, y1 + y2 * t->square());
              ps.erase(ps.begin() + static_cast<long>(j));
              ps[i] = std::move(merged);
              ++out.hyperbolic_planes;
              return true;
            }
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

WittBound witt_index_lower_bound(const QuadraticForm& phi) {
  WittBound out;
  std::vector<Piece> ps;
  for (const auto& b : phi.blocks()) ps.push_back(make_piece(b));
  while (rewrite_once(ps, out)) {
  }
  std::vector<Block> rest;
  for (const auto& p : ps) rest.push_back(p.block);
  out.residual = QuadraticForm(std::move(rest));
  return out;
}

QuadraticForm pure_subform(const BilinearDiag& b, const FieldElement& beta, const FieldElement& alpha) {
  if (!b.pfister_slots()) throw Error(ErrorCode::NotPfisterShape, "bilinear part is not a Pfister form");
  if (beta.is_zero()) throw Error(ErrorCode::ZeroScalar, "beta must be nonzero");
  const RingPtr& ring = beta.ring();
  const QuadraticForm one_alpha = QuadraticForm::binary(FieldElement::one(ring), alpha);
  QuadraticForm out = tensor_bilinear(b.pure_part(), one_alpha);
  std::vector<FieldElement> shifted;
  for (const auto& e : b.entries()) shifted.push_back(e * beta);
  out = orth_sum(out, tensor_bilinear(BilinearDiag(shifted), one_alpha));
  return orth_sum(out, QuadraticForm::unary(FieldElement::one(ring)));
}

bool same_blocks_up_to_order(const QuadraticForm& x, const QuadraticForm& y) {
  if (x.blocks().size() != y.blocks().size()) return false;
  std::vector<bool> used(y.blocks().size(), false);
  for (const auto& bx : x.blocks()) {
    bool found = false;
    for (std::size_t j = 0; j < y.blocks().size() && !found; ++j) {
      if (!used[j] && bx == y.blocks()[j]) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace pfister
