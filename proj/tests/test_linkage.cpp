#include <gtest/gtest.h>

#include "pfister/error.hpp"
#include "pfister/linkage.hpp"
#include "pfister/parse.hpp"

using namespace pfister;

namespace {

class Linkage : public ::testing::Test {
 protected:
  RingPtr ring = make_ring({"a", "b", "c"});
  FieldElement a = FieldElement::variable(ring, 0), b = FieldElement::variable(ring, 1),
               c = FieldElement::variable(ring, 2);
  FieldElement one = FieldElement::one(ring), zero = FieldElement::zero(ring);

  LinkageOptions quick() const {
    LinkageOptions o;
    o.trials = 30;
    return o;
  }
};

}  // namespace

TEST_F(Linkage, RightLinkedRepresentatives) {
  const PfisterForm phi{{}, a};
  const RepresentativeMap reps = right_linked_representatives({b, c}, phi);
  ASSERT_EQ(reps.size(), 3u);
  EXPECT_EQ(reps.at(3).slots.front(), b * c);
  EXPECT_EQ(reps.at(3).quad, a);
}

TEST_F(Linkage, SigmaClosedForm) {
  const PfisterSet set = PfisterSet::right_linked({b, c}, PfisterForm{{}, a});
  const SigmaInvariant s = sigma(set, quick());
  ASSERT_TRUE(s.closed_form.has_value());
  EXPECT_EQ(s.closed_form->fold(), 3u);
  EXPECT_TRUE(s.closed_form_formal);
  EXPECT_EQ(s.evidence.at("closed_form_difference").at("status"), "pass");
}

TEST_F(Linkage, PairCriterion) {
  LinkageOptions o = quick();
  EXPECT_EQ(pair_left_linkage_rightlinked(b, b, {a}, o).linked, Tri::True);
  EXPECT_EQ(pair_left_linkage_rightlinked(b, a * b, {a}, o).linked, Tri::True);
  EXPECT_EQ(pair_left_linkage_rightlinked(b, c, {a}, o).linked, Tri::False);
  EXPECT_THROW(pair_left_linkage_rightlinked(b, c, {}, o), Error);
}

TEST_F(Linkage, FaivreCriterion) {
  const PfisterForm p{{b}, a}, q{{c}, a};
  EXPECT_EQ(faivre_pair_criterion(p, p).linked, Tri::True);
  EXPECT_NE(faivre_pair_criterion(p, q).linked, Tri::True);
  EXPECT_EQ(pure_subform_of(PfisterForm{{b, c}, a}).dimension(), 7u);
}

TEST_F(Linkage, LadderOnLeftLinkedPair) {
  const LinkageReport r = strong_tightness_ladder(PfisterSet::left_linked({a, b}, {c}, ring), quick());
  EXPECT_EQ(r.strongly_tight, Tri::True);
  EXPECT_EQ(r.sigma_zero, Tri::True);
  EXPECT_EQ(r.left_linked, Tri::True);
}

TEST_F(Linkage, LadderOnGenericRightLinkedSet) {
  const LinkageReport r = strong_tightness_ladder(PfisterSet::right_linked({b, c}, PfisterForm{{}, a}), quick());
  EXPECT_EQ(r.strongly_tight, Tri::False);
  EXPECT_EQ(r.sigma_zero, Tri::False);
  EXPECT_EQ(r.left_linked, Tri::False);
  EXPECT_NO_THROW(r.check_consistency());
}

TEST_F(Linkage, InconsistentReportIsRejected) {
  LinkageReport r;
  r.left_linked = Tri::True;
  r.right_linked = Tri::False;
  EXPECT_THROW(r.check_consistency(), Error);
}

TEST_F(Linkage, GeneralSetNeedsRepresentatives) {
  const PfisterSet s = PfisterSet::general({PfisterForm{{b}, a}, PfisterForm{{c}, a}});
  EXPECT_THROW(s.representatives(), Error);
}

TEST_F(Linkage, AlbertForms) {
  const QuaternionAlgebra q1{a, c}, q2{b, a};
  EXPECT_EQ(albert_form(q1, q2).dimension(), 6u);
  EXPECT_EQ(albert_prime_form(q1, q2).dimension(), 5u);
  EXPECT_TRUE(sep_pair_test(q1, q2, {}, false).is_certified());
  EXPECT_TRUE(insep_pair_test(q1, q1).is_witness());
  EXPECT_THROW(norm_form(QuaternionAlgebra{a, zero}), Error);
}

TEST_F(Linkage, Isometry) {
  // a N(x, y) = N(a y, x + y) for N = [1, a].
  const std::vector<std::vector<FieldElement>> cols{
      {one, zero, zero, zero}, {zero, one, zero, zero}, {zero, zero, zero, one}, {zero, zero, a, one}};
  EXPECT_TRUE(verify_isometry(expand(PfisterForm{{c}, a}), expand(PfisterForm{{a * c}, a}), cols));
  EXPECT_FALSE(verify_isometry(expand(PfisterForm{{c}, a}), expand(PfisterForm{{b * c}, a}), cols));
}

TEST_F(Linkage, DimensionBound) {
  const RepresentativeMap reps = right_linked_representatives({b, c}, PfisterForm{{}, a});
  const DimBoundReport d = dim_bound_check(reps, 2, std::nullopt, quick());
  EXPECT_EQ(d.dimension, 8u);
  EXPECT_TRUE(d.ok());
  EXPECT_EQ(d.evidence.at("witt_equivalence").at("status"), "pass");
  EXPECT_THROW(dim_bound_check(reps, 2, std::pair{1u, 1u}), Error);
}

TEST_F(Linkage, TripleSigma) {
  const PfisterForm p1{{c}, a}, p2{{c}, b}, p3{{c}, a + b};
  TripleRepresentatives reps;
  reps.q12 = PfisterForm{{c}, a + b};
  reps.q13 = PfisterForm{{c}, b};
  reps.q23 = PfisterForm{{c}, a};
  reps.q123 = PfisterForm{{c}, zero};
  const TripleSigma t = triple_sigma(p1, p2, p3, reps, quick());
  EXPECT_TRUE(t.sigma.normal_form.empty());
  EXPECT_TRUE(t.reduced.has_value());
  EXPECT_THROW(triple_sigma(p1, p2, p3, TripleRepresentatives{}), Error);
}
