#include "pfister/field_element.hpp"

#include "pfister/error.hpp"

namespace pfister {

FieldElement::FieldElement(RingPtr ring) : num_(ring), den_(Poly::constant(ring, 1)) {}

FieldElement::FieldElement(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.ring(), 1)) {}

FieldElement FieldElement::one(RingPtr ring) { return FieldElement(Poly::constant(std::move(ring), 1)); }

FieldElement FieldElement::constant(RingPtr ring, Element c) {
  return FieldElement(Poly::constant(std::move(ring), c));
}

FieldElement FieldElement::variable(RingPtr ring, std::size_t index) {
  return FieldElement(Poly::variable(std::move(ring), index));
}

FieldElement FieldElement::variable(RingPtr ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) throw Error(ErrorCode::InvalidArgument, "unknown variable '" + name + "'");
  return variable(std::move(ring), *idx);
}

FieldElement fe_normalize(Poly num, Poly den) {
  require_same_ring(num.ring(), den.ring());
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is zero");
  if (num.is_zero()) return FieldElement(num.ring());
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = *divide_exact(num, g);
      den = *divide_exact(den, g);
    }
  }
  const auto c = den.field().inv(den.leading().coef);
  return FieldElement(num.scaled(c), den.scaled(c));
}

bool FieldElement::is_obvious_square() const {
  for (const Poly* p : {&num_, &den_})
    for (const auto& t : p->terms())
      for (auto e : t.exps)
        if (e % 2) return false;
  // Over a finite field of characteristic 2 every coefficient is a square, and
  // a sum of squares is a square.
  return true;
}

std::optional<FieldElement> FieldElement::obvious_sqrt() const {
  if (!is_obvious_square()) return std::nullopt;
  auto half = [](const Poly& p) {
    std::vector<Poly::Term> ts;
    for (auto t : p.terms()) {
      for (auto& e : t.exps) e /= 2;
      t.coef = p.field().sqrt(t.coef);
      ts.push_back(t);
    }
    return Poly::from_terms(p.ring(), std::move(ts));
  };
  return fe_normalize(half(num_), half(den_));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_ring(ring(), o.ring());
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return fe_normalize(num_ + o.num_, den_);
  return fe_normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_ring(ring(), o.ring());
  if (is_zero() || o.is_zero()) return FieldElement(ring());
  if (den_.is_one() && o.den_.is_one()) return FieldElement(num_ * o.num_, den_);
  return fe_normalize(num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return fe_normalize(den_, num_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_ring(ring(), o.ring());
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return fe_normalize(num_ * o.den_, den_ * o.num_);
}

FieldElement FieldElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return FieldElement(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

bool FieldElement::operator<(const FieldElement& o) const {
  if (den_ != o.den_) return den_ < o.den_;
  return num_ < o.num_;
}

std::string FieldElement::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const Poly& p) {
    const std::string s = p.to_string();
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

FiniteField::Element specialize(const FieldElement& f, const std::vector<FiniteField::Element>& point,
                                const FiniteField& target) {
  const auto d = evaluate(f.den(), point, target);
  if (d == 0) throw Error(ErrorCode::PoleAtPoint, "denominator of " + f.to_string() + " vanishes");
  return target.div(evaluate(f.num(), point, target), d);
}

FieldElement product(const std::vector<FieldElement>& xs, const RingPtr& ring) {
  FieldElement r = FieldElement::one(ring);
  for (const auto& x : xs) r *= x;
  return r;
}

}  // namespace pfister
