#include "pfister/symbols.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "pfister/error.hpp"
#include "pfister/f2_linear.hpp"

namespace pfister {

std::string PfisterForm::to_string() const {
  std::ostringstream os;
  os << "[[";
  for (const auto& s : slots) os << s.to_string() << ',';
  os << quad.to_string() << "]]";
  return os.str();
}

QPfisterSymbol::QPfisterSymbol(std::vector<FieldElement> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::InvalidArgument, "a symbol needs at least one entry");
  for (const auto& e : entries_) require_same_ring(entries_.front().ring(), e.ring());
}

QPfisterSymbol QPfisterSymbol::from_pfister(const PfisterForm& p) {
  std::vector<FieldElement> entries = p.slots;
  const FieldElement prod = product(p.slots, p.ring());
  if (prod.is_zero()) throw Error(ErrorCode::ZeroScalar, "bilinear slot is zero");
  entries.push_back(p.quad / prod);
  return QPfisterSymbol(std::move(entries));
}

bool QPfisterSymbol::has_zero_entry() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const FieldElement& e) { return e.is_zero(); });
}

PfisterForm QPfisterSymbol::to_pfister() const {
  std::vector<FieldElement> slots(entries_.begin(), entries_.end() - 1);
  return PfisterForm{slots, product(entries_, ring())};
}

std::string QPfisterSymbol::to_string() const {
  std::ostringstream os;
  os << "((";
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i].to_string();
  os << "))";
  return os.str();
}

std::vector<FieldElement> QPfisterSymbol::sorted_entries() const {
  auto v = entries_;
  std::sort(v.begin(), v.end());
  return v;
}

bool QPfisterSymbol::operator==(const QPfisterSymbol& o) const {
  return fold() == o.fold() && sorted_entries() == o.sorted_entries();
}

QuadraticForm expand(const PfisterForm& p) {
  const RingPtr& ring = p.ring();
  bool degenerate = false;
  for (const auto& s : p.slots) degenerate |= s.is_zero();
  if (degenerate) {
    std::vector<Block> blocks(std::size_t{1} << p.slots.size(),
                              BinaryBlock{FieldElement::zero(ring), FieldElement::zero(ring), FieldElement::one(ring)});
    return QuadraticForm(std::move(blocks));
  }
  return tensor_bilinear(BilinearDiag::pfister(p.slots, ring), QuadraticForm::binary(FieldElement::one(ring), p.quad));
}

QuadraticForm expand(const QPfisterSymbol& s) {
  if (s.has_zero_entry()) {
    const RingPtr& ring = s.ring();
    std::vector<Block> blocks(std::size_t{1} << (s.fold() - 1),
                              BinaryBlock{FieldElement::zero(ring), FieldElement::zero(ring), FieldElement::one(ring)});
    return QuadraticForm(std::move(blocks));
  }
  return expand(s.to_pfister());
}

SymbolSum::SymbolSum(std::size_t fold, std::vector<QPfisterSymbol> terms) : fold_(fold) {
  for (auto& t : terms) *this += t;
}

SymbolSum& SymbolSum::operator+=(const QPfisterSymbol& s) {
  if (s.fold() != fold_) throw Error(ErrorCode::DimensionMismatch, "adding symbols of different folds");
  terms_.push_back(s);
  normalized_ = false;
  return *this;
}

SymbolSum& SymbolSum::operator+=(const SymbolSum& o) {
  if (o.fold_ != fold_) throw Error(ErrorCode::DimensionMismatch, "adding sums of different folds");
  for (const auto& t : o.terms_) *this += t;
  return *this;
}

SymbolSum SymbolSum::operator+(const SymbolSum& o) const {
  SymbolSum r = *this;
  r += o;
  return r;
}

QuadraticForm SymbolSum::expand() const {
  QuadraticForm out;
  for (const auto& t : terms_) out = orth_sum(out, pfister::expand(t));
  return out;
}

std::string SymbolSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) s += (i ? " + " : "") + terms_[i].to_string();
  return s;
}

std::vector<std::vector<std::string>> SymbolSum::serialize() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& t : terms_) {
    std::vector<std::string> row;
    for (const auto& e : t.sorted_entries()) row.push_back(e.to_string());
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElement> atoms_of(const FieldElement& e) {
  std::vector<FieldElement> out;
  const RingPtr& ring = e.ring();
  for (const auto& t : e.num().terms()) {
    for (int j = 0; j < ring->field.degree(); ++j) {
      if (!((t.coef >> j) & 1u)) continue;
      out.push_back(fe_normalize(Poly::monomial(ring, t.exps, 1u << j), e.den()));
    }
  }
  return out;
}

namespace {

using Atoms = std::vector<FieldElement>;

// Exponent vector of a Laurent monomial.
std::vector<long> laurent_exponents(const FieldElement& a) {
  std::vector<long> d(kMaxVars);
  const auto& en = a.num().leading().exps;
  const auto& ed = a.den().leading().exps;
  for (std::size_t i = 0; i < kMaxVars; ++i) d[i] = static_cast<long>(en[i]) - static_cast<long>(ed[i]);
  return d;
}

std::uint32_t parity_bits(const FieldElement& a) {
  std::uint32_t bits = 0;
  const auto d = laurent_exponents(a);
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (d[i] % 2 != 0) bits |= 1u << i;
  return bits;
}

FieldElement laurent(const RingPtr& ring, const std::vector<long>& d, FiniteField::Element c) {
  Exponents pos{}, neg{};
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (d[i] > 0) pos[i] = static_cast<std::uint16_t>(d[i]);
    if (d[i] < 0) neg[i] = static_cast<std::uint16_t>(-d[i]);
  }
  return fe_normalize(Poly::monomial(ring, pos, c), Poly::monomial(ring, neg, 1));
}

// [1, a] depends on a modulo {x^2 + x}; reduce Laurent monomials to a
// canonical representative. Returns false if the atom is killed.
bool reduce_fold_one(FieldElement& atom) {
  if (!atom.is_laurent_monomial()) return true;
  const RingPtr& ring = atom.ring();
  const FiniteField& f = ring->field;
  auto d = laurent_exponents(atom);
  FiniteField::Element c = f.div(atom.num().leading().coef, atom.den().leading().coef);
  auto all_even_nonzero = [&] {
    bool nonzero = false;
    for (long x : d) {
      if (x % 2 != 0) return false;
      nonzero |= x != 0;
    }
    return nonzero;
  };
  // c x^{2e} = (sqrt(c) x^e)^2 is congruent to sqrt(c) x^e.
  while (all_even_nonzero()) {
    for (long& x : d) x /= 2;
    c = f.sqrt(c);
  }
  bool constant = std::all_of(d.begin(), d.end(), [](long x) { return x == 0; });
  if (constant) {
    if (f.trace(c) == 0) return false;
    FiniteField::Element delta = 1;
    while (f.trace(delta) == 0) ++delta;
    c = delta;
  }
  atom = laurent(ring, d, c);
  return true;
}

bool killed(const Atoms& atoms) {
  const std::size_t n = atoms.size();
  if (n < 2) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (atoms[i] == atoms[i + 1]) return true;  // sorted, so equal atoms are adjacent
  for (const auto& a : atoms)
    if (a.is_obvious_square()) return true;
  std::vector<std::uint32_t> laurent_bits;
  std::size_t non_laurent = 0;
  for (const auto& a : atoms) {
    if (a.is_laurent_monomial())
      laurent_bits.push_back(parity_bits(a));
    else
      ++non_laurent;
  }
  // Any n-1 of the entries can serve as bilinear slots; dependent valuation
  // parities among Laurent slots make the bilinear part isotropic.
  if (non_laurent > 0) return f2_rank(laurent_bits) < laurent_bits.size();
  // The quadratic slot is the product of all entries; as in the fold-one
  // reduction, c m^2 may be replaced by sqrt(c) m. If the reduced monomial's
  // square class is a product of bilinear slots, that product can be made a
  // slot b, and <<b>> (x) [1, b] is hyperbolic.
  std::vector<long> prod(kMaxVars, 0);
  for (const auto& a : atoms) {
    const auto d = laurent_exponents(a);
    for (std::size_t i = 0; i < kMaxVars; ++i) prod[i] += d[i];
  }
  auto all_even_nonzero = [&] {
    bool nonzero = false;
    for (long x : prod) {
      if (x % 2 != 0) return false;
      nonzero |= x != 0;
    }
    return nonzero;
  };
  while (all_even_nonzero())
    for (long& x : prod) x /= 2;
  std::uint32_t quad_bits = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (prod[i] % 2 != 0) quad_bits |= 1u << i;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::uint32_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) rest.push_back(laurent_bits[i]);
    const std::size_t r = f2_rank(rest);
    if (r < rest.size()) return true;
    if (quad_bits != 0) {
      rest.push_back(quad_bits);
      if (f2_rank(rest) == r) return true;
    }
  }
  return false;
}

void expand_product(const std::vector<Atoms>& per_entry, std::size_t pos, Atoms& cur,
                    std::map<Atoms, bool>& acc) {
  if (pos == per_entry.size()) {
    Atoms key = cur;
    std::sort(key.begin(), key.end());
    if (killed(key)) return;
    auto [it, inserted] = acc.emplace(std::move(key), true);
    if (!inserted) it->second = !it->second;
    return;
  }
  for (const auto& a : per_entry[pos]) {
    cur.push_back(a);
    expand_product(per_entry, pos + 1, cur, acc);
    cur.pop_back();
  }
}

}  // namespace

namespace {

// Atoms are only canonical for a fixed denominator. When some entry has a
// non-monomial denominator, all entries are split over the common one.
std::optional<Poly> common_denominator(const SymbolSum& s) {
  bool needed = false;
  for (const auto& t : s.terms())
    for (const auto& e : t.entries()) needed |= !e.den().is_monomial();
  if (!needed) return std::nullopt;
  Poly d = Poly::constant(s.terms().front().ring(), 1);
  for (const auto& t : s.terms())
    for (const auto& e : t.entries()) d = *divide_exact(d * e.den(), gcd(d, e.den()));
  return d;
}

Atoms atoms_over(const FieldElement& e, const Poly& d) {
  const Poly num = e.num() * *divide_exact(d, e.den());
  Atoms out;
  for (const auto& t : num.terms())
    for (int j = 0; j < num.field().degree(); ++j)
      if ((t.coef >> j) & 1u) out.push_back(fe_normalize(Poly::monomial(num.ring(), t.exps, 1u << j), d));
  return out;
}

}  // namespace

SymbolSum normalize(const SymbolSum& s) {
  std::map<Atoms, bool> acc;
  const std::optional<Poly> den = s.empty() ? std::nullopt : common_denominator(s);
  for (const auto& term : s.terms()) {
    std::vector<Atoms> per_entry;
    bool zero = false;
    for (const auto& e : term.entries()) {
      Atoms as = den ? atoms_over(e, *den) : atoms_of(e);
      if (s.fold() == 1) {
        Atoms reduced;
        for (auto& a : as)
          if (reduce_fold_one(a)) reduced.push_back(a);
        // Reduction can merge atoms; cancel equal ones.
        std::sort(reduced.begin(), reduced.end());
        Atoms uniq;
        for (std::size_t i = 0; i < reduced.size();) {
          std::size_t j = i;
          while (j < reduced.size() && reduced[j] == reduced[i]) ++j;
          if ((j - i) % 2 == 1) uniq.push_back(reduced[i]);
          i = j;
        }
        as = std::move(uniq);
      }
      if (as.empty()) zero = true;
      per_entry.push_back(std::move(as));
    }
    if (zero) continue;
    Atoms cur;
    expand_product(per_entry, 0, cur, acc);
  }
  SymbolSum out(s.fold());
  for (auto& [atoms, odd] : acc)
    if (odd) out.terms_.emplace_back(atoms);
  out.normalized_ = true;
  return out;
}

bool is_formally_hyperbolic(const SymbolSum& s) { return normalize(s).empty(); }

bool pfister_formally_hyperbolic(const PfisterForm& p) {
  if (p.quad.is_zero()) return true;
  for (const auto& s : p.slots)
    if (s.is_zero()) return true;
  if (bilinear_pfister_isotropic(p.slots, p.ring())) return true;
  const std::size_t k = p.slots.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    PfisterForm sub{{}, p.quad};
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) sub.slots.push_back(p.slots[i]);
    SymbolSum sum(sub.fold());
    sum += QPfisterSymbol::from_pfister(sub);
    if (is_formally_hyperbolic(sum)) return true;
  }
  return false;
}

std::vector<QPfisterSymbol> leave_one_out_family(const std::vector<FieldElement>& a) {
  std::vector<QPfisterSymbol> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<FieldElement> entries;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) entries.push_back(a[j]);
    out.emplace_back(std::move(entries));
  }
  return out;
}

QPfisterSymbol subset_sum_symbol(const std::vector<QPfisterSymbol>& psis, const std::vector<std::size_t>& subset) {
  const std::size_t m = psis.size();
  if (m < 2 || subset.empty())
    throw Error(ErrorCode::ConstructionInapplicable, "need at least two forms and a nonempty subset");
  // Recover a_i as the element missing from psi_i.
  std::vector<FieldElement> all;
  for (const auto& p : psis)
    for (const auto& e : p.entries())
      if (std::find(all.begin(), all.end(), e) == all.end()) all.push_back(e);
  if (all.size() != m)
    throw Error(ErrorCode::ConstructionInapplicable, "family is not of leave-one-out shape");
  std::vector<FieldElement> a;
  for (const auto& p : psis) {
    if (p.fold() != m - 1) throw Error(ErrorCode::ConstructionInapplicable, "wrong fold in family");
    auto sorted = p.sorted_entries();
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::ConstructionInapplicable, "repeated entry in family member");
    for (const auto& e : all)
      if (std::find(sorted.begin(), sorted.end(), e) == sorted.end()) a.push_back(e);
  }
  if (a.size() != m) throw Error(ErrorCode::ConstructionInapplicable, "family is not of leave-one-out shape");
  std::vector<std::size_t> idx = subset;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.back() >= m) throw Error(ErrorCode::InvalidArgument, "subset index out of range");
  const std::size_t i0 = idx.front();
  std::vector<FieldElement> entries;
  for (std::size_t j = 0; j < m; ++j)
    if (!std::binary_search(idx.begin(), idx.end(), j)) entries.push_back(a[j]);
  for (std::size_t t = 1; t < idx.size(); ++t) entries.push_back(a[i0] + a[idx[t]]);
  return QPfisterSymbol(std::move(entries));
}

RepresentativeMap right_linked_representatives(const std::vector<FieldElement>& betas, const PfisterForm& phi) {
  for (const auto& b : betas)
    if (b.is_zero()) throw Error(ErrorCode::ZeroScalar, "beta must be nonzero");
  if (betas.size() > 16) throw Error(ErrorCode::InvalidArgument, "at most 16 forms");
  RepresentativeMap out;
  for (std::uint32_t mask = 1; mask < (1u << betas.size()); ++mask) {
    FieldElement b = FieldElement::one(phi.ring());
    for (std::size_t i = 0; i < betas.size(); ++i)
      if ((mask >> i) & 1u) b *= betas[i];
    PfisterForm rep{{b}, phi.quad};
    rep.slots.insert(rep.slots.end(), phi.slots.begin(), phi.slots.end());
    out.emplace(mask, std::move(rep));
  }
  return out;
}

RepresentativeMap left_linked_representatives(const std::vector<FieldElement>& alphas,
                                              const std::vector<FieldElement>& b_slots) {
  if (alphas.empty()) return {};
  if (alphas.size() > 16) throw Error(ErrorCode::InvalidArgument, "at most 16 forms");
  for (const auto& s : b_slots)
    if (s.is_zero()) throw Error(ErrorCode::ZeroScalar, "bilinear slot is zero");
  RepresentativeMap out;
  for (std::uint32_t mask = 1; mask < (1u << alphas.size()); ++mask) {
    FieldElement a = FieldElement::zero(alphas.front().ring());
    for (std::size_t i = 0; i < alphas.size(); ++i)
      if ((mask >> i) & 1u) a += alphas[i];
    out.emplace(mask, PfisterForm{b_slots, a});
  }
  return out;
}

}  // namespace pfister
