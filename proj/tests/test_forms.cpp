#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pfister/error.hpp"
#include "pfister/finite_form.hpp"
#include "pfister/kernels.hpp"
#include "pfister/parse.hpp"
#include "pfister/quadform.hpp"

using namespace pfister;

namespace {

std::vector<FiniteBlock> blocks_from(std::uint64_t idx, std::size_t count, std::uint32_t q) {
  std::vector<FiniteBlock> out;
  for (std::size_t i = 0; i < count; ++i) {
    FiniteBlock b;
    b.a = static_cast<std::uint32_t>(idx % q);
    idx /= q;
    b.b = static_cast<std::uint32_t>(idx % q);
    idx /= q;
    out.push_back(b);
  }
  return out;
}

}  // namespace

TEST(QuadraticForm, ScaleAndTensorKeepBasis) {
  const RingPtr ring = make_ring({"a", "b", "c"});
  const auto a = FieldElement::variable(ring, 0), b = FieldElement::variable(ring, 1), c = FieldElement::variable(ring, 2);
  const QuadraticForm q = QuadraticForm::binary(a, b);
  const QuadraticForm t = tensor_bilinear(BilinearDiag({FieldElement::one(ring), c}), q);
  ASSERT_EQ(t.dimension(), 4u);
  const auto zero = FieldElement::zero(ring), one = FieldElement::one(ring);
  EXPECT_EQ(evaluate(t, {zero, zero, one, zero}), c * a);
  EXPECT_EQ(evaluate(t, {one, one, zero, zero}), a + one + b);
  // c[a,b] is isometric to [ca, b/c]; the value at (1, 0) is ca either way.
  EXPECT_EQ(evaluate(scale(c, q), {one, zero}), c * a);
  EXPECT_EQ(arf(orth_sum(q, QuadraticForm::binary(c, c))), a * b + c * c);
}

TEST(QuadraticForm, WittIndexLowerBound) {
  const RingPtr ring = make_ring({"a", "b"});
  const QuadraticForm h = parse_form("[1,a] _|_ [1,a]", ring);
  EXPECT_EQ(witt_index_lower_bound(h).hyperbolic_planes, 2u);  // q _|_ q = <1,1> (x) q is hyperbolic
  EXPECT_EQ(witt_index_lower_bound(parse_form("[0,a]", ring)).hyperbolic_planes, 1u);
  EXPECT_EQ(witt_index_lower_bound(parse_form("[1,a] _|_ b*[1,a]", ring)).hyperbolic_planes, 0u);
}

// Oracle: zero counts. Frozen: [1,1] over F_2 is the anisotropic plane.
TEST(FiniteWitt, FrozenSmallCases) {
  const FiniteField f2 = FiniteField::standard(1);
  EXPECT_EQ(oracle::count_zeros(f2, {FiniteBlock{false, 1, 1, 1}}), 1u);
  EXPECT_EQ(oracle::count_zeros(f2, {FiniteBlock{false, 0, 0, 1}}), 3u);
  FiniteBlockForm aniso{f2, {FiniteBlock{false, 1, 1, 1}}};
  EXPECT_EQ(witt_decompose_finite(aniso).witt_index, 0u);
  EXPECT_EQ(witt_decompose_finite(aniso).dim_anisotropic, 2u);
  FiniteBlockForm two{f2, {FiniteBlock{false, 1, 1, 1}, FiniteBlock{false, 1, 1, 1}}};
  EXPECT_EQ(witt_decompose_finite(two).witt_index, 2u);
}

TEST(FiniteWitt, ArfClassificationAgreesWithZeroCount) {
  for (int k : {1, 2}) {
    const FiniteField f = FiniteField::standard(k);
    const std::uint32_t q = f.order();
    for (std::size_t m = 1; m <= 3; ++m) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < 2 * m; ++i) total *= q;
      // Every tuple for m <= 2, a stride for m = 3 to keep the brute force small.
      const std::uint64_t step = m == 3 ? 7 : 1;
      for (std::uint64_t idx = 0; idx < total; idx += step) {
        const auto blocks = blocks_from(idx, m, q);
        const FiniteBlockForm fb{f, blocks};
        ASSERT_EQ(witt_decompose_finite(fb).witt_index, oracle::witt_index_by_count(f, blocks)) << fb.to_string();
      }
    }
  }
}

TEST(FiniteWitt, ExhaustiveIndexHandlesSingularForms) {
  const FiniteField f = FiniteField::standard(2);
  FiniteForm phi(f, 3);
  phi.set_coef(0, 0, 1);
  phi.set_coef(1, 1, 1);
  phi.set_coef(0, 1, 1);
  // x^2 + xy + y^2 on the first two coordinates, radical direction z.
  EXPECT_TRUE(exhaustive_isotropic(phi, Exec::Serial));
  EXPECT_EQ(exhaustive_witt_index(phi, Exec::Serial), 1u);
}

TEST(FiniteWitt, SpecializeRejectsPoles) {
  const RingPtr ring = make_ring({"x"});
  const QuadraticForm phi = parse_form("[1, 1/x]", ring);
  const FiniteField f = FiniteField::standard(2);
  EXPECT_THROW(specialize(phi, {0}, f), Error);
  EXPECT_EQ(specialize(phi, {2}, f).blocks.size(), 1u);
}

TEST(Kernels, FirstHitSerialMatchesParallel) {
  for (std::uint64_t mod : {7ull, 1000ull, 65537ull, 1ull << 40}) {
    auto hit = [mod](std::uint64_t i) { return kernels::splitmix64(i) % mod == 0; };
    EXPECT_EQ(kernels::first_hit_serial(0, 1 << 20, hit), kernels::first_hit_parallel(0, 1 << 20, hit)) << mod;
  }
  auto never = [](std::uint64_t) { return false; };
  EXPECT_FALSE(kernels::first_hit_parallel(5, 5000, never).has_value());
}

TEST(Kernels, FindIsotropicSerialMatchesParallel) {
  const FiniteField f = FiniteField::standard(2);
  for (std::uint64_t idx = 0; idx < 4096; idx += 13) {
    const FiniteBlockForm fb{f, blocks_from(idx, 3, 4)};
    const FiniteForm d = fb.to_dense();
    EXPECT_EQ(kernels::find_isotropic(d, false, Exec::Serial), kernels::find_isotropic(d, false, Exec::Parallel));
    EXPECT_EQ(exhaustive_witt_index(d, Exec::Serial), exhaustive_witt_index(d, Exec::Parallel));
  }
}

TEST(Kernels, DecodeVector) {
  std::vector<std::uint32_t> out(3);
  kernels::decode_vector(0b11'10'01, 2, 3, out.data());
  EXPECT_EQ(out, (std::vector<std::uint32_t>{1, 2, 3}));
}
