#include "pfister/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pfister/error.hpp"

namespace pfister {

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> variables, FiniteField field) {
  if (variables.size() > kMaxVars)
    throw Error(ErrorCode::InvalidArgument,
                "at most " + std::to_string(kMaxVars) + " variables are supported");
  return std::make_shared<const Ring>(Ring{field, std::move(variables)});
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(ErrorCode::RingMismatch, "operands live in different fields");
}

bool exps_less(const Exponents& a, const Exponents& b) {
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Exponents exps_add(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

bool exps_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents exps_sub(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

namespace {

bool term_less(const Poly::Term& a, const Poly::Term& b) { return exps_less(a.exps, b.exps); }

void canonicalize(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Poly::Term t = terms[i];
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].exps == t.exps) t.coef ^= terms[j++].coef;
    if (t.coef != 0) terms[out++] = t;
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {}

Poly Poly::constant(RingPtr ring, Element c) {
  if (!ring->field.contains(c)) throw Error(ErrorCode::InvalidArgument, "coefficient outside field");
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({Exponents{}, c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_vars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(std::move(ring), e, 1);
}

Poly Poly::monomial(RingPtr ring, const Exponents& exps, Element c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({exps, c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].exps == Exponents{} && terms_[0].coef == 1; }

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Exponents{}); }

const Poly::Term& Poly::leading() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "leading term of zero polynomial");
  return terms_.back();
}

int Poly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.exps[var]);
  return d;
}

int Poly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto e : t.exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_ring(ring_, o.ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && term_less(terms_[i], o.terms_[j]))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || term_less(o.terms_[j], terms_[i])) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      const Element c = terms_[i].coef ^ o.terms_[j].coef;
      if (c != 0) r.terms_.push_back({terms_[i].exps, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  require_same_ring(ring_, o.ring_);
  Poly r(ring_);
  if (terms_.empty() || o.terms_.empty()) return r;
  const FiniteField& f = ring_->field;
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.push_back({exps_add(a.exps, b.exps), f.mul(a.coef, b.coef)});
  canonicalize(acc);
  r.terms_ = std::move(acc);
  return r;
}

Poly Poly::scaled(Element c) const {
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef = ring_->field.mul(t.coef, c);
  return r;
}

Poly Poly::mul_term(const Exponents& e, Element c) const {
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) {
    t.exps = exps_add(t.exps, e);
    t.coef = ring_->field.mul(t.coef, c);
  }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field.inv(leading().coef));
}

bool Poly::operator<(const Poly& o) const {
  const std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t k = 1; k <= n; ++k) {
    const Term& a = terms_[terms_.size() - k];
    const Term& b = o.terms_[o.terms_.size() - k];
    if (a.exps != b.exps) return exps_less(a.exps, b.exps);
    if (a.coef != b.coef) return a.coef < b.coef;
  }
  return terms_.size() < o.terms_.size();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (it->coef != 1 || it->exps == Exponents{}) {
      if (it->coef <= 1) {
        os << it->coef;
      } else {
        os << "0x" << std::hex << it->coef << std::dec;
      }
      wrote = true;
    }
    for (std::size_t v = 0; v < ring_->num_vars(); ++v) {
      if (it->exps[v] == 0) continue;
      if (wrote) os << '*';
      os << ring_->variables[v];
      if (it->exps[v] > 1) os << '^' << it->exps[v];
      wrote = true;
    }
  }
  return os.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const FiniteField& f = a.field();
  const Poly::Term lb = b.leading();
  const auto inv_lb = f.inv(lb.coef);
  std::vector<Poly::Term> q, r;
  Poly p = a;
  while (!p.is_zero()) {
    const Poly::Term lp = p.leading();
    if (exps_divides(lb.exps, lp.exps)) {
      const Exponents e = exps_sub(lp.exps, lb.exps);
      const auto c = f.mul(lp.coef, inv_lb);
      q.push_back({e, c});
      p = p + b.mul_term(e, c);
    } else {
      r.push_back(lp);
      p = p + Poly::monomial(a.ring(), lp.exps, lp.coef);
    }
  }
  return {Poly::from_terms(a.ring(), std::move(q)), Poly::from_terms(a.ring(), std::move(r))};
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  DivMod dm = divmod(a, b);
  if (!dm.remainder.is_zero()) return std::nullopt;
  return dm.quotient;
}

namespace {

Poly expect_exact(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorCode::InvalidArgument, "internal: inexact division in gcd");
  return *q;
}

int main_variable(const Poly& p) {
  int v = -1;
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.exps[i] > 0) v = std::max<int>(v, static_cast<int>(i));
  return v;
}

// Coefficients of p viewed as a polynomial in x_v, keyed by degree.
std::map<int, Poly> coefficients_in(const Poly& p, std::size_t v) {
  std::map<int, std::vector<Poly::Term>> parts;
  for (auto t : p.terms()) {
    const int d = t.exps[v];
    t.exps[v] = 0;
    parts[d].push_back(t);
  }
  std::map<int, Poly> out;
  for (auto& [d, ts] : parts) out.emplace(d, Poly::from_terms(p.ring(), std::move(ts)));
  return out;
}

Poly leading_coefficient_in(const Poly& p, std::size_t v) { return coefficients_in(p, v).rbegin()->second; }

Poly monomial_gcd(const Poly& a, const Poly& b) {
  Exponents e = a.terms().front().exps;
  auto absorb = [&](const Poly& p) {
    for (const auto& t : p.terms())
      for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = std::min(e[i], t.exps[i]);
  };
  absorb(a);
  absorb(b);
  return Poly::monomial(a.ring(), e, 1);
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, std::size_t v) {
  Poly c(p.ring());
  for (const auto& [d, coef] : coefficients_in(p, v)) {
    c = gcd_rec(c, coef);
    if (c.is_one()) break;
  }
  return c;
}

Poly prem(Poly r, const Poly& b, std::size_t v) {
  const int db = b.degree_in(v);
  const Poly lcb = leading_coefficient_in(b, v);
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const int dr = r.degree_in(v);
    Exponents shift{};
    shift[v] = static_cast<std::uint16_t>(dr - db);
    const Poly lcr = leading_coefficient_in(r, v);
    r = lcb * r + (lcr * b).mul_term(shift, 1);
  }
  return r;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_monomial() || b.is_monomial()) return monomial_gcd(a, b);
  const int v = std::max(main_variable(a), main_variable(b));
  if (v < 0) return Poly::constant(a.ring(), 1);
  const auto uv = static_cast<std::size_t>(v);
  if (!a.involves(uv)) return gcd_rec(a, content_in(b, uv));
  if (!b.involves(uv)) return gcd_rec(content_in(a, uv), b);

  const Poly ca = content_in(a, uv);
  const Poly cb = content_in(b, uv);
  const Poly c = gcd_rec(ca, cb);
  Poly pa = expect_exact(a, ca);
  Poly pb = expect_exact(b, cb);
  if (pa.degree_in(uv) < pb.degree_in(uv)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = prem(pa, pb, uv);
    pa = std::move(pb);
    if (r.is_zero() || !r.involves(uv)) {
      // A nonzero remainder free of x_v means the primitive parts are coprime.
      pb = Poly(a.ring());
      if (!r.is_zero()) pa = Poly::constant(a.ring(), 1);
    } else {
      pb = expect_exact(r, content_in(r, uv));
    }
  }
  Poly g = pa.involves(uv) ? expect_exact(pa, content_in(pa, uv)) : Poly::constant(a.ring(), 1);
  return (c * g).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() && b.is_zero()) return a;
  return gcd_rec(a, b);
}

FiniteField::Element evaluate(const Poly& p, const std::vector<FiniteField::Element>& point,
                              const FiniteField& target) {
  const Ring& ring = *p.ring();
  if (point.size() != ring.num_vars())
    throw Error(ErrorCode::DimensionMismatch, "point has wrong number of coordinates");
  const bool prime_coefficients = ring.field.degree() == 1;
  if (!prime_coefficients && !(ring.field == target))
    throw Error(ErrorCode::InvalidArgument, "cannot embed coefficients into " + target.name());
  FiniteField::Element acc = 0;
  for (const auto& t : p.terms()) {
    FiniteField::Element m = t.coef;
    for (std::size_t v = 0; v < ring.num_vars() && m != 0; ++v)
      if (t.exps[v]) m = target.mul(m, target.pow(point[v], t.exps[v]));
    acc ^= m;
  }
  return acc;
}

}  // namespace pfister
