#include "pfister/symbols.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pfister/error.hpp"

namespace pfister {

namespace {

std::uint32_t parity_of_laurent(const FieldElement& a) {
  std::uint32_t bits = 0;
  const auto& en = a.num().leading().exps;
  const auto& ed = a.den().leading().exps;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if ((en[i] + ed[i]) % 2 != 0) bits |= 1u << i;
  return bits;
}

// f = sum_eps x^eps g_eps^2 with g_eps = P_eps / den, where P = num * den.
// Returns the P_eps keyed by eps.
std::map<std::uint32_t, Poly> square_components(const FieldElement& f) {
  const Poly p = f.num() * f.den();
  const FiniteField& field = p.field();
  std::map<std::uint32_t, std::vector<Poly::Term>> parts;
  for (const auto& t : p.terms()) {
    std::uint32_t eps = 0;
    Exponents half{};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (t.exps[i] % 2) eps |= 1u << i;
      half[i] = static_cast<std::uint16_t>(t.exps[i] / 2);
    }
    parts[eps].push_back({half, field.sqrt(t.coef)});
  }
  std::map<std::uint32_t, Poly> out;
  for (auto& [eps, ts] : parts) out.emplace(eps, Poly::from_terms(p.ring(), std::move(ts)));
  return out;
}

}  // namespace

bool bilinear_isotropic(const std::vector<FieldElement>& entries) {
  if (entries.empty()) return false;
  for (const auto& e : entries)
    if (e.is_zero()) return true;
  const bool all_laurent = std::all_of(entries.begin(), entries.end(),
                                       [](const FieldElement& e) { return e.is_laurent_monomial(); });
  if (all_laurent) {
    std::set<std::uint32_t> seen;
    for (const auto& e : entries)
      if (!seen.insert(parity_of_laurent(e)).second) return true;
    return false;
  }
  // Linear dependence over the squares of the b_i is dependence over F of the
  // coordinate rows (g_{i,eps})_eps; scaling row i by den_i does not matter.
  const RingPtr& ring = entries.front().ring();
  std::vector<std::map<std::uint32_t, Poly>> comps;
  std::set<std::uint32_t> cols;
  for (const auto& e : entries) {
    comps.push_back(square_components(e));
    for (const auto& [eps, _] : comps.back()) cols.insert(eps);
  }
  if (entries.size() > cols.size()) return true;
  std::vector<std::vector<FieldElement>> m;
  for (const auto& c : comps) {
    std::vector<FieldElement> row;
    for (auto eps : cols) {
      auto it = c.find(eps);
      row.push_back(it == c.end() ? FieldElement::zero(ring) : FieldElement(it->second));
    }
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  const std::size_t ncols = cols.size();
  for (std::size_t c = 0; c < ncols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const FieldElement inv = m[rank][c].inverse();
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      const FieldElement factor = m[r][c] * inv;
      for (std::size_t j = c; j < ncols; ++j) m[r][j] += factor * m[rank][j];
    }
    ++rank;
  }
  return rank < entries.size();
}

bool bilinear_pfister_isotropic(const std::vector<FieldElement>& slots, const RingPtr& ring) {
  if (slots.empty()) return false;
  return bilinear_isotropic(BilinearDiag::pfister(slots, ring).entries());
}

FieldElement square_class_representative(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroScalar, "square class of zero");
  const RingPtr& ring = a.ring();
  Poly p = a.num() * a.den();  // a = p / den^2
  Exponents mu = p.terms().front().exps;
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < kMaxVars; ++i) mu[i] = std::min(mu[i], t.exps[i]);
  std::vector<Poly::Term> rest;
  for (auto t : p.terms()) {
    t.exps = exps_sub(t.exps, mu);
    rest.push_back(t);
  }
  Poly body = Poly::from_terms(ring, std::move(rest));
  bool body_square = true;
  for (const auto& t : body.terms())
    for (auto e : t.exps) body_square &= e % 2 == 0;
  Exponents odd{};
  for (std::size_t i = 0; i < kMaxVars; ++i) odd[i] = mu[i] % 2;
  Poly rep = Poly::monomial(ring, odd, 1);
  if (!body_square) rep = rep * body.monic();
  return FieldElement(rep);
}

void BilinearWittSum::add(const FieldElement& a) {
  const FieldElement rep = square_class_representative(a);
  const std::string key = rep.to_string();
  auto it = keys_.find(key);
  if (it == keys_.end())
    keys_.emplace(key, rep);
  else
    keys_.erase(it);
}

void BilinearWittSum::add_pfister(const std::vector<FieldElement>& slots) {
  const BilinearDiag b = BilinearDiag::pfister(slots, ring_);
  for (const auto& e : b.entries()) add(e);
}

void BilinearWittSum::add(const BilinearWittSum& o) {
  for (const auto& [k, v] : o.keys_) add(v);
}

std::string BilinearWittSum::to_string() const {
  if (keys_.empty()) return "0";
  std::string s = "<";
  bool first = true;
  for (const auto& [k, v] : keys_) {
    s += (first ? "" : ",") + k;
    first = false;
  }
  return s + ">";
}

}  // namespace pfister
