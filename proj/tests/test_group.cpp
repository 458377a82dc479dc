#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "rankone/group.hpp"

using namespace rankone;

namespace {

std::vector<Permutation> sym_generators(std::size_t n) {
  std::vector<Point> cyc(n), tr(n);
  std::iota(cyc.begin(), cyc.end(), 1);
  cyc.back() = 0;
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  return {Permutation(cyc), Permutation(tr)};
}

// PGL(2,3) on {inf,0,1,2}: t+1, 2t, -1/t with inf at index 0, t at 1+t.
std::vector<Permutation> pgl23() { return {Permutation({0, 2, 3, 1}), Permutation({0, 1, 3, 2}), Permutation({1, 0, 3, 2})}; }

}  // namespace

TEST(Closure, ThreeCycle) {
  const auto G = closure_generate({Permutation({1, 2, 0})}, 10);
  EXPECT_EQ(G.order(), 3u);
  EXPECT_TRUE(G.contains(Permutation::identity(3)));
}

TEST(Closure, PGL23HasOrder24) {
  const auto G = closure_generate(pgl23(), 100);
  EXPECT_EQ(G.order(), 24u);
}

TEST(Closure, SortedAndClosed) {
  const auto G = closure_generate(sym_generators(5), 200);
  ASSERT_EQ(G.order(), 120u);
  for (std::size_t i = 1; i < G.order(); ++i) EXPECT_LT(G.element(i - 1), G.element(i));
  for (std::size_t i = 0; i < G.order(); i += 7)
    for (std::size_t j = 0; j < G.order(); j += 5) EXPECT_TRUE(G.contains(G.element(i) * G.element(j)));
  EXPECT_TRUE(G.element(0).is_identity());
}

TEST(Closure, CapExceeded) { EXPECT_THROW(closure_generate(sym_generators(6), 100), GroupError); }

TEST(Closure, RejectsMixedDegrees) {
  EXPECT_THROW(closure_generate({Permutation::identity(3), Permutation::identity(4)}, 10), PermutationError);
}

TEST(Closure, StreamMatchesMaterialized) {
  const auto G = closure_generate(sym_generators(5), 200);
  std::vector<Permutation> seen;
  const auto count = stream_closure(sym_generators(5), 200, [&](std::span<const Cell> r) {
    seen.push_back(Permutation::from_trusted(r));
  });
  EXPECT_EQ(count, 120u);
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i) EXPECT_EQ(seen[i], G.element(i));
}

TEST(Transitivity, Certificates) {
  const auto c3 = transitivity_certificate(pgl23(), 4, 3);
  EXPECT_TRUE(c3.holds());
  EXPECT_EQ(c3.orbit_size, 24u);
  const std::vector<Permutation> cyc{Permutation({1, 2, 3, 0})};
  EXPECT_TRUE(transitivity_certificate(cyc, 4, 1).holds());
  EXPECT_FALSE(transitivity_certificate(cyc, 4, 2).holds());
}

TEST(MemoryPolicy, Limits) {
  MemoryPolicy m;
  EXPECT_TRUE(m.allows(29120, 65));
  EXPECT_FALSE(m.allows(32537600, 1025));
  EXPECT_FALSE(m.allows(20'000'001, 3));
}

TEST(Distance, MemberIsAtZero) {
  const auto G = closure_generate(pgl23(), 100);
  for (std::size_t i = 0; i < G.order(); ++i) EXPECT_EQ(distance_to_group(G.element(i), G).distance, 0u);
}

TEST(Distance, BruteAndStreamAgreeAndAreCosetInvariant) {
  const Permutation r({1, 0, 2, 3, 4});
  const auto G = closure_generate({Permutation({1, 2, 3, 4, 0}), Permutation({0, 2, 4, 1, 3})}, 100);  // AGL(1,5)
  ASSERT_EQ(G.order(), 20u);
  std::mt19937_64 rng(3);
  std::vector<Point> v(5);
  std::iota(v.begin(), v.end(), 0);
  for (int t = 0; t < 30; ++t) {
    std::shuffle(v.begin(), v.end(), rng);
    const Permutation p(v);
    const auto b = distance_to_group(p, G, DistanceMode::brute);
    const auto s = distance_to_group(p, G, DistanceMode::stream);
    EXPECT_EQ(b.distance, s.distance);
    EXPECT_EQ(b.witness, s.witness);
    EXPECT_EQ(hamming(p, b.witness), b.distance);
    for (std::size_t i = 0; i < G.order(); i += 3) EXPECT_EQ(distance_to_group(p * G.element(i), G).distance, b.distance);
  }
}

TEST(Distance, PartitionIndependent) {
  const auto G = closure_generate(sym_generators(6), 1000);
  const auto H = closure_generate({Permutation({1, 2, 3, 4, 5, 0})}, 10);
  const Permutation v({5, 3, 1, 0, 2, 4});
  const auto a = distance_to_group(v, H, DistanceMode::brute, 1);
  const auto b = distance_to_group(v, H, DistanceMode::brute, 4);
  EXPECT_EQ(a.distance, b.distance);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(distance_to_group(v, G, DistanceMode::brute, 3).distance, 0u);
}

TEST(Distance, Errors) {
  const auto G = closure_generate(pgl23(), 100);
  EXPECT_THROW(distance_to_group(Permutation::identity(5), G), PermutationError);
  GroupHandle lazy(4, pgl23(), 24, {});
  EXPECT_THROW(distance_to_group(Permutation::identity(4), lazy, DistanceMode::brute), InfeasibleError);
  EXPECT_EQ(distance_to_group(Permutation({1, 0, 2, 3}), lazy, DistanceMode::stream).distance, 0u);
}
