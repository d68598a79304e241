#include <gtest/gtest.h>

#include <set>

#include "pfister/abstract_tight.hpp"
#include "pfister/error.hpp"

using namespace pfister;
using namespace pfister::tight;

namespace {

// Naive reference: enumerate every subset sum directly.
bool naive_strongly_tight(const std::set<std::uint32_t>& p, const std::vector<std::uint32_t>& s) {
  for (std::uint32_t m = 0; m < (1u << s.size()); ++m) {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (m >> i & 1) x ^= s[i];
    if (!p.count(x)) return false;
  }
  return true;
}

}  // namespace

TEST(TightContext, Validation) {
  EXPECT_THROW(TightContext::make(2, {}, {1, 2}), Error);         // 0 missing
  EXPECT_THROW(TightContext::make(2, {}, {0, 1}), Error);         // does not span
  EXPECT_THROW(TightContext::make(2, {1}, {0, 1, 2}), Error);     // 0 and 1 share a coset
  EXPECT_THROW(TightContext::make(13, {}, {0}), Error);
  EXPECT_NO_THROW(TightContext::make(2, {}, {0, 1, 2}));
  const auto ctx = TightContext::make(3, {4}, {0, 1, 2, 7});
  EXPECT_EQ(ctx.p_rep(5), 1);
  EXPECT_EQ(ctx.p_rep(3), 7);
  EXPECT_EQ(ctx.p_rep(6), 2);
  EXPECT_EQ(TightContext::from_json(ctx.to_json()).p_list(), ctx.p_list());
}

TEST(Tight, HandExample) {
  // V = F_2^3, U = <4>, P = {0, 1, 2, 7}: {1, 2} is tight (1+2 = 3 lies in 7 + U)
  // but not strongly tight, and Sigma = 1 + 2 + 7 = 4 lies in U.
  const auto ctx = TightContext::make(3, {4}, {0, 1, 2, 7});
  EXPECT_TRUE(is_tight(ctx, {1, 2}));
  EXPECT_FALSE(is_strongly_tight(ctx, {1, 2}));
  EXPECT_EQ(sigma_abstract(ctx, {1, 2}), 4u);
  EXPECT_TRUE(is_almost_strongly_tight(ctx, {1, 2}));
  const auto strong = TightContext::make(2, {}, {0, 1, 2, 3});
  EXPECT_TRUE(is_strongly_tight(strong, {1, 2}));
  EXPECT_EQ(sigma_abstract(strong, {1, 2}), 0u);
  EXPECT_THROW(is_tight(ctx, {3}), Error);
}

TEST(Tight, MatchesNaiveReference) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::vector<std::uint32_t> p;
    const F2Span u;
    if (!sample_p(4, u, seed, p)) continue;
    const auto ctx = TightContext::make(4, {}, p);
    const std::set<std::uint32_t> ps(p.begin(), p.end());
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        EXPECT_EQ(is_strongly_tight(ctx, {p[i], p[j]}), naive_strongly_tight(ps, {p[i], p[j]}));
  }
}

TEST(Tight, VerifyFindsNoViolations) {
  const auto ctx = TightContext::make(3, {4}, {0, 1, 2, 7});
  const VerifyReport prep = verify_prep(ctx), ladder = verify_ladder(ctx);
  EXPECT_EQ(prep.violations, 0u);
  EXPECT_EQ(ladder.violations, 0u);
  EXPECT_GT(ladder.sets_checked, 0u);
  const auto both = verify_both(ctx);
  EXPECT_EQ(both.first.to_json(), prep.to_json());
  EXPECT_EQ(both.second.to_json(), ladder.to_json());
}

TEST(Tight, SubspaceCounts) {
  // Gaussian binomials: F_2^4 has 1, 15, 35, 15, 1 subspaces of dim 0..4.
  EXPECT_EQ(subspaces(4, 4, -1).size(), 67u);
  EXPECT_EQ(subspaces(4, 1, -1).size(), 16u);
  EXPECT_EQ(subspaces(4, -1, 1).size(), 16u);
  EXPECT_EQ(subspaces(5, 2, 2).size(), 1u + 31 + 155 + 155 + 31 + 1);
}

TEST(Tight, FuzzSerialMatchesParallel) {
  FuzzOptions o;
  o.max_dim_v = 4;
  o.samples = 20;
  o.exec = Exec::Serial;
  const FuzzReport a = fuzz(o);
  o.exec = Exec::Parallel;
  const FuzzReport b = fuzz(o);
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_EQ(a.prep.violations + a.ladder.violations, 0u);
  EXPECT_GT(a.prep.sets_checked, 0u);
}
