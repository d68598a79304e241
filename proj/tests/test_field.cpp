#include <gtest/gtest.h>

#include "pfister/error.hpp"
#include "pfister/field_element.hpp"
#include "pfister/finite_field.hpp"
#include "pfister/parse.hpp"
#include "pfister/poly.hpp"

using namespace pfister;

TEST(FiniteField, TablesMatchShiftAndReduce) {
  for (int k : {1, 2, 3, 4, 8}) {
    const FiniteField f = FiniteField::standard(k);
    for (std::uint32_t a = 0; a < f.order(); ++a)
      for (std::uint32_t b = 0; b < f.order(); ++b) ASSERT_EQ(f.mul(a, b), f.mul_slow(a, b)) << k;
  }
}

TEST(FiniteField, InverseSqrtTrace) {
  const FiniteField f = FiniteField::standard(4);
  std::size_t trace_zero = 0;
  for (std::uint32_t a = 1; a < f.order(); ++a) {
    EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_EQ(f.square(f.sqrt(a)), a);
  }
  for (std::uint32_t a = 0; a < f.order(); ++a) {
    bool in_image = false;
    for (std::uint32_t x = 0; x < f.order(); ++x) in_image |= (f.square(x) ^ x) == a;
    EXPECT_EQ(in_image, f.in_artin_schreier_image(a));
    trace_zero += f.trace(a) == 0;
  }
  EXPECT_EQ(trace_zero, 8u);
}

TEST(FiniteField, Spec) {
  EXPECT_EQ(FiniteField::from_spec("2^4"), FiniteField::standard(4));
  EXPECT_EQ(FiniteField::from_spec("F_16"), FiniteField::standard(4));
  EXPECT_EQ(FiniteField::from_spec("4"), FiniteField::standard(2));
  EXPECT_THROW(FiniteField::from_spec("6"), Error);
}

class PolyTest : public ::testing::Test {
 protected:
  RingPtr ring = make_ring({"x", "y", "z"});
  Poly x = Poly::variable(ring, 0), y = Poly::variable(ring, 1), z = Poly::variable(ring, 2);
  Poly one = Poly::constant(ring, 1);
};

TEST_F(PolyTest, EvaluationIsAHomomorphism) {
  const FiniteField f = FiniteField::standard(8);
  const Poly p = x * x * y + z + one, q = x + y * z * z;
  for (std::uint32_t t = 1; t < 50; ++t) {
    const std::vector<std::uint32_t> pt{t, (t * 37) % 256, (t * 101 + 3) % 256};
    EXPECT_EQ(evaluate(p * q, pt, f), f.mul(evaluate(p, pt, f), evaluate(q, pt, f)));
    EXPECT_EQ(evaluate(p + q, pt, f), evaluate(p, pt, f) ^ evaluate(q, pt, f));
  }
}

TEST_F(PolyTest, DivisionAndGcd) {
  const Poly a = (x + y) * (x * z + one), b = (x + y) * (y + z);
  const DivMod dm = divmod(a, b);
  EXPECT_EQ(dm.quotient * b + dm.remainder, a);
  EXPECT_EQ(gcd(a, b), (x + y).monic());
  EXPECT_EQ(*divide_exact(a, x + y), x * z + one);
  EXPECT_FALSE(divide_exact(a, y + z).has_value());
  EXPECT_EQ((x + one).pow(2), x * x + one);
}

TEST_F(PolyTest, LastVariableIsMostSignificant) {
  // x^5 < z under the term order.
  EXPECT_EQ((x.pow(5) + z).leading().exps, z.leading().exps);
  EXPECT_EQ((x + y).leading().exps, y.leading().exps);
}

TEST(FieldElement, ReducedFractions) {
  const RingPtr ring = make_ring({"x", "y"});
  const auto x = FieldElement::variable(ring, 0), y = FieldElement::variable(ring, 1);
  const FieldElement f = (x * x + y * y) / (x + y);
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f, x + y);
  EXPECT_EQ((x / y) * (y / x), FieldElement::one(ring));
  EXPECT_TRUE((x * x / (y * y)).is_obvious_square());
  EXPECT_FALSE((x / y).is_obvious_square());
  EXPECT_THROW(x / FieldElement::zero(ring), Error);
}

TEST(FieldElement, SpecializeAndPoles) {
  const RingPtr ring = make_ring({"x", "y"});
  const FieldElement f = parse_element("x / (x + y)", ring);
  const FiniteField F4 = FiniteField::standard(2);
  EXPECT_EQ(specialize(f, {2, 3}, F4), F4.div(2, 1));
  EXPECT_THROW(specialize(f, {1, 1}, F4), Error);
}

TEST(Parse, ElementsAndForms) {
  const RingPtr ring = make_ring({"a", "b"});
  const auto a = FieldElement::variable(ring, 0), b = FieldElement::variable(ring, 1);
  EXPECT_EQ(parse_element("(a+b)^2", ring), a * a + b * b);
  EXPECT_EQ(parse_element("a^-1 * b", ring), b / a);
  EXPECT_EQ(parse_form("[1,a] _|_ <b>", ring).dimension(), 3u);
  EXPECT_EQ(parse_form("<<a,b>>*[1,a]", ring).dimension(), 8u);
  EXPECT_EQ(parse_symbol("((a,b))", ring), QPfisterSymbol({b, a}));
  EXPECT_THROW(parse_element("a +", ring), Error);
  EXPECT_THROW(parse_element("c", ring), Error);
  EXPECT_EQ(collect_identifiers("((x, y+z)) + ((x,x))"), (std::vector<std::string>{"x", "y", "z"}));
}
