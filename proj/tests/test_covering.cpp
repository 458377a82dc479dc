#include <gtest/gtest.h>

#include <numeric>

#include "rankone/covering.hpp"
#include "rankone/rank_one.hpp"

using namespace rankone;

namespace {

// Max over Sym_n of min distance, with no pruning.
std::size_t naive_radius(const GroupHandle& G) {
  const std::size_t n = G.degree();
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::size_t best = 0;
  do {
    best = std::max(best, distance_to_group(Permutation(v), G).distance);
  } while (std::next_permutation(v.begin(), v.end()));
  return best;
}

}  // namespace

TEST(CoveringRadius, SymmetricGroupIsZero) {
  const auto G = closure_generate({Permutation({1, 2, 3, 4, 0}), Permutation({1, 0, 2, 3, 4})}, 200);
  EXPECT_EQ(covering_radius_exact(G).radius, 0u);
}

TEST(CoveringRadius, PSL23IsTwo) {
  const auto B = build_group(Family::psl2, 3);
  const auto r = covering_radius_exact(B.group);
  EXPECT_EQ(r.radius, 2u);
  EXPECT_EQ(distance_to_group(r.witness, B.group).distance, 2u);
}

TEST(CoveringRadius, PGU32IsSix) {
  const auto B = build_group(Family::pgu3, 2);
  const auto r = covering_radius_exact(B.group);
  EXPECT_EQ(r.radius, 6u);
  EXPECT_EQ(distance_to_group(r.witness, B.group).distance, 6u);
}

TEST(CoveringRadius, MatchesUnprunedSweep) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    for (Family f : {Family::pgl2, Family::psl2}) {
      const auto B = build_group(f, q);
      EXPECT_EQ(covering_radius_exact(B.group).radius, naive_radius(B.group)) << to_string(f) << " q=" << q;
    }
  }
  const auto C = closure_generate({Permutation({1, 2, 3, 4, 5, 0})}, 10);
  EXPECT_EQ(covering_radius_exact(C).radius, naive_radius(C));
}

TEST(CoveringRadius, WitnessIsLexicographicallyLeast) {
  const auto B = build_group(Family::psl2, 4);
  const auto r = covering_radius_exact(B.group);
  std::vector<Point> v(5);
  std::iota(v.begin(), v.end(), 0);
  do {
    if (distance_to_group(Permutation(v), B.group).distance == r.radius) break;
  } while (std::next_permutation(v.begin(), v.end()));
  EXPECT_EQ(r.witness, Permutation(v));
}

TEST(CoveringRadius, PartitionIndependent) {
  const auto B = build_group(Family::psl2, 7);
  CoveringOptions one, four;
  four.workers = 4;
  const auto a = covering_radius_exact(B.group, one), b = covering_radius_exact(B.group, four);
  EXPECT_EQ(a.radius, b.radius);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(CoveringRadius, TransitivityBound) {
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    const auto B = build_group(Family::pgl2, q);
    EXPECT_LE(covering_radius_exact(B.group).radius, B.group.degree() - 3);
  }
  const auto U = build_group(Family::pgu3, 2);
  EXPECT_LE(covering_radius_exact(U.group).radius, U.group.degree() - 2);
}

TEST(CoveringRadius, Errors) {
  const auto B = build_group(Family::pgl2, 11);
  EXPECT_THROW(covering_radius_exact(B.group), InfeasibleError);
  const auto C = build_group(Family::psl2, 5);
  CoveringOptions tiny;
  tiny.budget = 10;
  EXPECT_THROW(covering_radius_exact(C.group, tiny), BudgetError);
}
