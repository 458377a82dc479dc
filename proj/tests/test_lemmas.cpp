#include <gtest/gtest.h>

#include <algorithm>

#include "rankone/lemmas.hpp"

using namespace rankone;

TEST(Eq3, AtMostOneSolutionWithANonzeroAtQ2) {
  auto E = FieldCtx::quadratic_extension(2, 1);
  for (Elem g = 1; g < E.q(); ++g)
    for (Elem d : E.norm_one_elements()) {
      const auto r = count_eq3(E, g, d);
      EXPECT_LE(r.count_a_nonzero, 1u);
      EXPECT_TRUE(r.holds);
    }
}

TEST(Eq3, PrimeCaseGammaOutsideKernelGivesOnlyTrivial) {
  auto E = FieldCtx::quadratic_extension(3, 1);
  // a^2 = gamma^4 forces gamma^4 to be a square in GF(3)
  std::size_t maxa = 0;
  for (Elem g = 1; g < E.q(); ++g)
    for (Elem d : E.norm_one_elements()) maxa = std::max(maxa, count_eq3(E, g, d).count_a_nonzero);
  EXPECT_LE(maxa, 2u);
}

TEST(Eq3, MaximumAtQ9) {
  auto E = FieldCtx::quadratic_extension(3, 2);
  std::size_t maxa = 0;
  for (Elem g = 1; g < E.q(); g += 5)
    for (Elem d : E.norm_one_elements()) {
      const auto r = count_eq3(E, g, d);
      EXPECT_TRUE(r.holds);
      maxa = std::max(maxa, r.count_a_nonzero);
    }
  EXPECT_LE(maxa, 2u);
}

TEST(Eq3, Errors) {
  auto F = make_field(3, 2);
  EXPECT_THROW(count_eq3(F, 1, 1), FieldError);
  auto E = FieldCtx::quadratic_extension(3, 1);
  EXPECT_THROW(count_eq3(E, 0, 1), FieldError);
  EXPECT_THROW(count_eq3(E, 1, E.primitive_element()), FieldError);
}

TEST(Eq3, CorrespondsToFixedPoints) {
  HermitianDomain D(3);
  const auto& E = D.field();
  const auto hinv = inverse(field_automorphism_h(D));
  for (Elem g = 1; g < E.q(); ++g)
    for (Elem d : E.norm_one_elements())
      EXPECT_EQ(fix_count(torus_element(D, g, d) * hinv), 2 + count_eq3(E, g, d).count_a_nonzero);
}

TEST(Eq9, Q8KappaOne) {
  SuzukiDomain D(8);
  const auto r = count_eq9(D, 1);
  EXPECT_EQ(r.count, 4u);
  EXPECT_TRUE(r.holds);
  std::vector<std::vector<Elem>> want{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
  auto got = r.solutions;
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, want);
}

TEST(Eq9, EveryKappaHasFourSolutions) {
  for (std::uint32_t q : {8u, 32u}) {
    SuzukiDomain D(q);
    const auto hinv = inverse(field_automorphism_h(D));
    for (Elem k = 1; k < q; k += (q == 32 ? 5 : 1)) {
      const auto r = count_eq9(D, k);
      EXPECT_EQ(r.count, 4u) << q << " " << k;
      EXPECT_TRUE(r.holds);
      if (q == 8) {
        EXPECT_EQ(fix_count(torus_element(D, k) * hinv), 1 + r.count);
      }
    }
    const auto r = count_eq9(D, D.field().primitive_element());
    EXPECT_EQ(r.count, 4u);
  }
  EXPECT_THROW(count_eq9(SuzukiDomain(8), 0), FieldError);
}

TEST(Eq8, ReeCounts) {
  ReeDomain D(27);
  const auto r1 = count_eq8(D, 1);
  EXPECT_TRUE(r1.holds);
  for (Elem k = 2; k < 27; k += 4) EXPECT_TRUE(count_eq8(D, k).holds);
  ReeDomain S(3);
  EXPECT_TRUE(count_eq8(S, 1).holds);
}

TEST(ReducedDistance, Examples) {
  const auto r = distance_reduced(SuzukiDomain(8), field_automorphism_h(SuzukiDomain(8)));
  EXPECT_EQ(r.distance, 60u);
  EXPECT_EQ(r.max_fix, 5u);
  EXPECT_EQ(r.coset_size, 7u);
  EXPECT_TRUE(r.justified);
  HermitianDomain H(9);
  const auto h = field_automorphism_h(H);
  const auto rh = distance_reduced(H, h);
  EXPECT_EQ(rh.distance, 726u);
  EXPECT_EQ(hamming(h, rh.witness), rh.distance);
  ReeDomain R(3);
  EXPECT_EQ(distance_reduced(R, field_automorphism_h(R)).distance, 0u);
}

TEST(Bounds, ClosedForms) {
  EXPECT_EQ(claimed_lower_bound(Family::pgu3, 9), 726u);
  EXPECT_EQ(claimed_lower_bound(Family::sz, 8), 60u);
  EXPECT_EQ(claimed_lower_bound(Family::ree, 27), 19656u);
  EXPECT_EQ(cited_upper_bound(Family::pgu3, 4), 62u);
  EXPECT_EQ(cited_upper_bound(Family::pgu3, 3), 26u);
  EXPECT_EQ(cited_upper_bound(Family::sz, 8), 62u);
  EXPECT_EQ(cited_upper_bound(Family::ree, 27), 19682u);
}

TEST(Theorem, ReportsAgreeWithBruteForce) {
  TheoremOptions opt;
  opt.cr_if_feasible = false;
  const auto a = theorem_report(Family::pgu3, 3, opt);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.lower, 24u);
  ASSERT_TRUE(a.brute_distance);
  EXPECT_EQ(*a.brute_distance, 24u);
  const auto b = theorem_report(Family::sz, 8, opt);
  EXPECT_TRUE(b.ok());
  EXPECT_EQ(b.lower, 60u);
  EXPECT_EQ(b.upper, 62u);
  EXPECT_LE(b.lower, b.upper);
}

TEST(Theorem, ExactRadiusAtSmallestCase) {
  const auto r = theorem_report(Family::pgu3, 2);
  EXPECT_TRUE(r.ok());
  ASSERT_TRUE(r.cr_exact);
  EXPECT_EQ(*r.cr_exact, 6u);
  EXPECT_EQ(r.lower, 6u);
  EXPECT_EQ(r.upper, 6u);
}

TEST(Theorem, LargeCasesUseTheReducedMethod) {
  const auto r = theorem_report(Family::ree, 27);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.lower, 19656u);
  EXPECT_FALSE(r.brute_distance);
  EXPECT_TRUE(r.justified);
}
