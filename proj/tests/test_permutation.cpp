#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "rankone/permutation.hpp"

using namespace rankone;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace

TEST(Permutation, ValidatesBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), PermutationError);
  EXPECT_THROW(Permutation({0, 3, 1}), PermutationError);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(Permutation, ComposeActsLeftToRight) {
  const Permutation g({1, 2, 0}), h({0, 2, 1});
  const Permutation gh = compose(g, h);
  for (Point i = 0; i < 3; ++i) EXPECT_EQ(gh[i], h[g[i]]);
  EXPECT_EQ(compose(g, Permutation::identity(3)), g);
}

TEST(Permutation, InverseOfThreeCycle) {
  EXPECT_EQ(inverse(Permutation({1, 2, 0})), Permutation({2, 0, 1}));
}

TEST(Permutation, InverseAtDegree100) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_perm(100, rng);
    EXPECT_TRUE((g * inverse(g)).is_identity());
    EXPECT_TRUE((inverse(g) * g).is_identity());
  }
}

TEST(Permutation, DegreeMismatch) {
  EXPECT_THROW(compose(Permutation::identity(3), Permutation::identity(4)), PermutationError);
  EXPECT_THROW(hamming(Permutation::identity(3), Permutation::identity(4)), PermutationError);
}

TEST(Permutation, FixCount) {
  EXPECT_EQ(fix_count(Permutation::identity(7)), 7u);
  EXPECT_EQ(fix_count(Permutation({1, 2, 0})), 0u);
}

TEST(Permutation, PowerAndOrder) {
  const Permutation g({1, 2, 0, 4, 3});
  EXPECT_EQ(element_order(g), 6u);
  EXPECT_TRUE(power(g, 6).is_identity());
  EXPECT_EQ(power(g, -1), inverse(g));
  EXPECT_EQ(power(g, 7), g);
}

TEST(Hamming, Examples) {
  const Permutation g({1, 2, 0}), h({2, 0, 1});
  EXPECT_EQ(hamming(g, g), 0u);
  EXPECT_EQ(hamming(g, h), 3u);
}

TEST(Hamming, MetricAxioms) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> deg(1, 200);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = deg(rng);
    const auto a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
    EXPECT_EQ(hamming(a, b), hamming(b, a));
    EXPECT_EQ(hamming(a, b) == 0, a == b);
    EXPECT_LE(hamming(a, c), hamming(a, b) + hamming(b, c));
    EXPECT_EQ(hamming(a, b), n - fix_count(a * inverse(b)));
  }
}

TEST(Hamming, NeverOneExhaustive) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Point> v(n);
    std::iota(v.begin(), v.end(), 0);
    do {
      const Permutation g(v);
      EXPECT_NE(fix_count(g), n - 1);
      EXPECT_NE(hamming(g, Permutation::identity(n)), 1u);
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST(Permutation, LexicographicOrder) {
  EXPECT_LT(Permutation({0, 2, 1}), Permutation({1, 0, 2}));
  EXPECT_LT(Permutation::identity(3), Permutation({0, 2, 1}));
}
