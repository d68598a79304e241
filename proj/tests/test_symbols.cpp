#include <gtest/gtest.h>

#include <optional>

#include "oracles.hpp"
#include "pfister/error.hpp"
#include "pfister/oracle.hpp"
#include "pfister/parse.hpp"
#include "pfister/symbols.hpp"

using namespace pfister;

namespace {

class Symbols : public ::testing::Test {
 protected:
  RingPtr ring = make_ring({"x", "y", "z"});
  FieldElement x = FieldElement::variable(ring, 0), y = FieldElement::variable(ring, 1),
               z = FieldElement::variable(ring, 2);
  SymbolSum sum(const std::string& s, std::size_t fold = 0) { return parse_symbol_sum(s, ring, fold); }
};

}  // namespace

TEST_F(Symbols, PfisterRoundTrip) {
  const QPfisterSymbol s({x, y, z});
  const PfisterForm p = s.to_pfister();
  EXPECT_EQ(p.fold(), 3u);
  EXPECT_EQ(p.quad, x * y * z);
  EXPECT_EQ(QPfisterSymbol::from_pfister(p), s);
  EXPECT_EQ(expand(s).dimension(), 8u);
  EXPECT_EQ(expand(QPfisterSymbol({x, FieldElement::zero(ring)})).dimension(), 4u);
}

TEST_F(Symbols, FrozenNormalForms) {
  EXPECT_TRUE(normalize(sum("((x,y)) + ((y,x))")).empty());
  EXPECT_TRUE(normalize(sum("((x,x))")).empty());
  EXPECT_TRUE(normalize(sum("((x,y^2))")).empty());
  EXPECT_TRUE(normalize(sum("((x,y)) + ((x,z)) + ((x,y+z))")).empty());
  EXPECT_TRUE(normalize(sum("((x,y,x*y))")).empty());
  EXPECT_TRUE(normalize(sum("((x^2 + x))")).empty());
  EXPECT_FALSE(normalize(sum("((x,y))")).empty());
  EXPECT_FALSE(normalize(sum("((x,y,z))")).empty());
  EXPECT_FALSE(normalize(sum("((x))")).empty());
  const SymbolSum nf = normalize(sum("((x+y, z))"));
  EXPECT_EQ(nf.terms().size(), 2u);
  EXPECT_TRUE(normalize(nf + sum("((x,z)) + ((y,z))")).empty());
}

TEST_F(Symbols, RationalEntriesShareADenominator) {
  const FieldElement b = x * y, b2 = y / (x + z);
  SymbolSum s(2);
  s += QPfisterSymbol({z, b});
  s += QPfisterSymbol({z, b2});
  s += QPfisterSymbol({z, b + b2});
  EXPECT_TRUE(normalize(s).empty());
}

TEST_F(Symbols, NormalizeIsSoundAtSpecializations) {
  // Oracle: every sum the calculus kills is hyperbolic at points of F_2,
  // checked by counting zeros.
  const std::vector<std::string> killed{"((x,y)) + ((y,x))", "((x,y)) + ((x,z)) + ((x,y+z))", "((x+1,x+1))",
                                        "((x,y,x*y))", "((x,x^3))", "((x,y,x*y^3))"};
  const FiniteField f2 = FiniteField::standard(1);
  for (const auto& t : killed) {
    const SymbolSum s = sum(t);
    ASSERT_TRUE(normalize(s).empty()) << t;
    for (std::uint32_t p = 0; p < 8; ++p) {
      const std::vector<std::uint32_t> pt{p & 1, (p >> 1) & 1, (p >> 2) & 1};
      std::optional<FiniteBlockForm> fb;
      try {
        fb = specialize(s.expand(), pt, f2);
      } catch (const pfister::Error&) {
        continue;
      }
      EXPECT_TRUE(oracle::hyperbolic_by_count(f2, fb->blocks)) << t << " at " << p;
    }
  }
}

TEST_F(Symbols, SubsetSumFamily) {
  const RingPtr r = make_ring({"a0", "a1", "a2"});
  std::vector<FieldElement> a;
  for (std::size_t i = 0; i < 3; ++i) a.push_back(FieldElement::variable(r, i));
  const auto psis = leave_one_out_family(a);
  ASSERT_EQ(psis.size(), 3u);
  const QPfisterSymbol s = subset_sum_symbol(psis, {0, 1});
  SymbolSum check(2);
  check += s;
  check += psis[0];
  check += psis[1];
  EXPECT_TRUE(normalize(check).empty());
  EXPECT_THROW(subset_sum_symbol(psis, {}), pfister::Error);
}

TEST_F(Symbols, BilinearWitt) {
  EXPECT_TRUE(bilinear_isotropic({x, x * y * y}));
  EXPECT_FALSE(bilinear_isotropic({x, y}));
  EXPECT_TRUE(bilinear_pfister_isotropic({x, x}, ring));
  BilinearWittSum w(ring);
  w.add_pfister({x});
  w.add_pfister({y});
  w.add_pfister({x * y});
  w.add_pfister({x, y});
  EXPECT_TRUE(w.is_zero());
  BilinearWittSum v(ring);
  v.add(x);
  EXPECT_FALSE(v.is_zero());
  v.add(x * z * z);
  EXPECT_TRUE(v.is_zero());
}

TEST_F(Symbols, FormallyHyperbolicPfister) {
  EXPECT_TRUE(pfister_formally_hyperbolic(PfisterForm{{x * y, y}, x}));
  EXPECT_TRUE(pfister_formally_hyperbolic(PfisterForm{{x}, x}));
  EXPECT_FALSE(pfister_formally_hyperbolic(PfisterForm{{y}, x}));
}
