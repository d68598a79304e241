#include "pfister/finite_form.hpp"

#include <algorithm>
#include <sstream>

#include "pfister/error.hpp"
#include "pfister/kernels.hpp"

namespace pfister {

FiniteForm::FiniteForm(FiniteField field, std::size_t n) : field_(field), n_(n), c_(n * n, 0) {}

FiniteForm::Element FiniteForm::value(const Element* x) const {
  Element q = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    Element row = 0;
    for (std::size_t j = i; j < n_; ++j) row ^= field_.mul(c_[i * n_ + j], x[j]);
    q ^= field_.mul(x[i], row);
  }
  return q;
}

FiniteForm::Element FiniteForm::polar(const Element* x, const Element* y) const {
  Element s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Element c = c_[i * n_ + j];
      if (c) s ^= field_.mul(c, field_.mul(x[i], y[j]) ^ field_.mul(x[j], y[i]));
    }
  return s;
}

void FiniteForm::polar_row(const Element* x, Element* out) const {
  for (std::size_t j = 0; j < n_; ++j) {
    Element s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == j || x[i] == 0) continue;
      const Element c = i < j ? c_[i * n_ + j] : c_[j * n_ + i];
      s ^= field_.mul(c, x[i]);
    }
    out[j] = s;
  }
}

bool FiniteForm::in_radical(const Element* x) const {
  std::vector<Element> row(n_);
  polar_row(x, row.data());
  for (auto r : row)
    if (r) return false;
  return true;
}

FiniteForm FiniteForm::restrict_to(const std::vector<std::vector<Element>>& basis) const {
  FiniteForm out(field_, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.set_coef(i, i, value(basis[i].data()));
    for (std::size_t j = i + 1; j < basis.size(); ++j) out.set_coef(i, j, polar(basis[i].data(), basis[j].data()));
  }
  return out;
}

std::size_t FiniteBlockForm::dimension() const {
  std::size_t d = 0;
  for (const auto& b : blocks) d += b.unary ? 1 : 2;
  return d;
}

FiniteForm FiniteBlockForm::to_dense() const {
  FiniteForm f(field, dimension());
  std::size_t pos = 0;
  for (const auto& b : blocks) {
    if (b.unary) {
      f.set_coef(pos, pos, b.a);
      pos += 1;
    } else {
      f.set_coef(pos, pos, field.mul(b.scale, b.a));
      f.set_coef(pos, pos + 1, b.scale);
      f.set_coef(pos + 1, pos + 1, field.mul(b.scale, b.b));
      pos += 2;
    }
  }
  return f;
}

std::string FiniteBlockForm::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << " _|_ ";
    const auto& b = blocks[i];
    if (b.unary)
      os << '<' << b.a << '>';
    else
      os << '<' << b.scale << ">*[" << b.a << ',' << b.b << ']';
  }
  return os.str();
}

FiniteBlockForm specialize(const QuadraticForm& phi, const std::vector<FiniteField::Element>& point,
                           const FiniteField& target) {
  FiniteBlockForm out{target, {}};
  for (const auto& blk : phi.blocks()) {
    if (const auto* u = std::get_if<UnaryBlock>(&blk)) {
      out.blocks.push_back({true, specialize(u->a, point, target), 0, 1});
    } else {
      const auto& b = std::get<BinaryBlock>(blk);
      const auto s = specialize(b.scale, point, target);
      if (s == 0) throw Error(ErrorCode::PoleAtPoint, "block scale " + b.scale.to_string() + " vanishes");
      out.blocks.push_back({false, specialize(b.a, point, target), specialize(b.b, point, target), s});
    }
  }
  return out;
}

WittClassFinite witt_decompose_finite(const FiniteBlockForm& phi) {
  WittClassFinite w;
  w.dimension = phi.dimension();
  for (const auto& b : phi.blocks) {
    if (b.unary) throw Error(ErrorCode::SingularForm, "form has a quasilinear part");
    if (b.scale == 0) throw Error(ErrorCode::SingularForm, "binary block with zero scale");
    w.arf ^= phi.field.mul(b.a, b.b);
  }
  w.arf_in_artin_schreier_image = phi.field.in_artin_schreier_image(w.arf);
  w.dim_anisotropic = (w.dimension == 0 || w.arf_in_artin_schreier_image) ? 0 : 2;
  w.witt_index = (w.dimension - w.dim_anisotropic) / 2;
  return w;
}

WittClassFinite witt_decompose_finite(const QuadraticForm& phi) {
  if (phi.empty()) return {};
  const RingPtr ring = phi.ring();
  auto constant_of = [&](const FieldElement& f) {
    if (!f.is_constant()) throw Error(ErrorCode::InfiniteField, "entry " + f.to_string() + " is not a constant");
    return f.num().is_zero() ? 0u : ring->field.div(f.num().leading().coef, f.den().leading().coef);
  };
  FiniteBlockForm fb{ring->field, {}};
  for (const auto& blk : phi.blocks()) {
    if (const auto* u = std::get_if<UnaryBlock>(&blk)) {
      fb.blocks.push_back({true, constant_of(u->a), 0, 1});
    } else {
      const auto& b = std::get<BinaryBlock>(blk);
      fb.blocks.push_back({false, constant_of(b.a), constant_of(b.b), constant_of(b.scale)});
    }
  }
  return witt_decompose_finite(fb);
}

namespace {

using Element = FiniteField::Element;

// Basis of {x : r1.x = 0, r2.x = 0} for two independent functionals.
std::vector<std::vector<Element>> kernel_of_two(const FiniteField& f, std::vector<Element> r1,
                                                std::vector<Element> r2) {
  const std::size_t n = r1.size();
  std::vector<std::vector<Element>> rows{std::move(r1), std::move(r2)};
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Element inv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const Element m = rows[o][c];
      for (std::size_t j = 0; j < n; ++j) rows[o][j] ^= f.mul(m, rows[r][j]);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Element>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Element> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::size_t exhaustive_witt_index(const FiniteForm& phi, Exec exec) {
  FiniteForm cur = phi;
  std::size_t index = 0;
  while (cur.dimension() >= 2) {
    const std::size_t n = cur.dimension();
    auto idx = kernels::find_isotropic(cur, false, exec);
    if (!idx) break;
    std::vector<Element> v(n), w(n, 0), row(n);
    kernels::decode_vector(*idx, cur.field().degree(), n, v.data());
    cur.polar_row(v.data(), row.data());
    std::size_t j = 0;
    while (row[j] == 0) ++j;
    w[j] = cur.field().inv(row[j]);
    std::vector<Element> roww(n);
    cur.polar_row(w.data(), roww.data());
    cur = cur.restrict_to(kernel_of_two(cur.field(), row, roww));
    ++index;
  }
  return index;
}

bool exhaustive_isotropic(const FiniteForm& phi, Exec exec) {
  return kernels::find_isotropic(phi, true, exec).has_value();
}

}  // namespace pfister
