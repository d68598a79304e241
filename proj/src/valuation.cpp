#include "pfister/valuation.hpp"

#include <sstream>

#include "pfister/error.hpp"

namespace pfister {

bool GammaValue::operator<(const GammaValue& o) const {
  if (comps.size() != o.comps.size()) throw Error(ErrorCode::DimensionMismatch, "value group rank mismatch");
  for (std::size_t i = comps.size(); i-- > 0;)
    if (comps[i] != o.comps[i]) return comps[i] < o.comps[i];
  return false;
}

GammaValue GammaValue::operator+(const GammaValue& o) const {
  GammaValue r = *this;
  for (std::size_t i = 0; i < comps.size(); ++i) r.comps[i] += o.comps[i];
  return r;
}

GammaValue GammaValue::operator-(const GammaValue& o) const {
  GammaValue r = *this;
  for (std::size_t i = 0; i < comps.size(); ++i) r.comps[i] -= o.comps[i];
  return r;
}

bool GammaValue::is_zero() const {
  for (auto c : comps)
    if (c) return false;
  return true;
}

bool GammaValue::is_negative() const {
  for (std::size_t i = comps.size(); i-- > 0;)
    if (comps[i] != 0) return comps[i] < 0;
  return false;
}

std::string GammaValue::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < comps.size(); ++i) os << (i ? "," : "") << comps[i];
  os << ')';
  return os.str();
}

std::string GammaClass::to_string(std::size_t m) const {
  std::string s;
  for (std::size_t i = 0; i < m; ++i) s += ((bits >> i) & 1u) ? '1' : '0';
  return s;
}

MonomialValuation::MonomialValuation(RingPtr ring) : ring_(std::move(ring)) {}

GammaValue MonomialValuation::value(const FieldElement& f) const {
  require_same_ring(ring_, f.ring());
  if (f.is_zero()) throw Error(ErrorCode::ValuationOfZero, "valuation of zero");
  GammaValue g;
  g.comps.resize(rank());
  const auto& en = f.num().leading().exps;
  const auto& ed = f.den().leading().exps;
  for (std::size_t i = 0; i < rank(); ++i) g.comps[i] = static_cast<long>(ed[i]) - static_cast<long>(en[i]);
  return g;
}

GammaClass MonomialValuation::class_of(const GammaValue& g) const {
  GammaClass c;
  for (std::size_t i = 0; i < g.comps.size(); ++i)
    if (g.comps[i] % 2 != 0) c.bits |= 1u << i;
  return c;
}

GammaClass MonomialValuation::value_mod2(const FieldElement& f) const { return class_of(value(f)); }

GammaValue valuation(const FieldElement& f, const MonomialValuation& v) { return v.value(f); }
GammaClass valuation_mod2(const FieldElement& f, const MonomialValuation& v) { return v.value_mod2(f); }

}  // namespace pfister
