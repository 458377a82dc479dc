#include <gtest/gtest.h>

#include <set>

#include "rankone/rank_one.hpp"

using namespace rankone;

TEST(BuildDomain, Sizes) {
  EXPECT_EQ(domain_size(build_domain(Family::pgu3, 2)), 9u);
  EXPECT_EQ(domain_size(build_domain(Family::sz, 8)), 65u);
  EXPECT_EQ(domain_size(build_domain(Family::ree, 3)), 28u);
  EXPECT_EQ(domain_size(build_domain(Family::pgl2, 7)), 8u);
  EXPECT_THROW(build_domain(Family::sz, 16), DomainError);
  EXPECT_THROW(parse_family("gl3"), DomainError);
}

TEST(FieldAutomorphism, SmallCasesAreIdentity) {
  EXPECT_TRUE(field_automorphism_h(SuzukiDomain(2)).is_identity());
  EXPECT_TRUE(field_automorphism_h(ReeDomain(3)).is_identity());
}

TEST(FieldAutomorphism, HermitianFixesThreeKnownPoints) {
  HermitianDomain D(2);
  const auto h = field_automorphism_h(D);
  EXPECT_EQ(h[0], 0u);
  EXPECT_EQ(h[1], 1u);
  EXPECT_EQ(h[D.index_of({1, 0, 1})], D.index_of({1, 0, 1}));
  EXPECT_GE(fix_count(h), 3u);
}

TEST(FieldAutomorphism, Orders) {
  for (std::uint32_t q : {2u, 3u, 4u, 8u, 9u}) {
    HermitianDomain D(q);
    EXPECT_EQ(element_order(field_automorphism_h(D)), 2u * D.f()) << q;
  }
  EXPECT_EQ(element_order(field_automorphism_h(SuzukiDomain(8))), 3u);
  EXPECT_EQ(element_order(field_automorphism_h(SuzukiDomain(32))), 5u);
  EXPECT_EQ(element_order(field_automorphism_h(ReeDomain(27))), 3u);
}

TEST(Torus, SuzukiIdentityAndFixedPoints) {
  SuzukiDomain D(8);
  EXPECT_TRUE(torus_element(D, 1).is_identity());
  const auto hinv = inverse(field_automorphism_h(D));
  for (Elem k = 1; k < 8; ++k) {
    const auto y = torus_element(D, k);
    EXPECT_EQ(y[0], 0u);
    EXPECT_EQ(y[1], 1u);
    EXPECT_EQ(fix_count(y * hinv), 5u);
  }
  EXPECT_THROW(torus_element(D, 0), DomainError);
}

TEST(Torus, HermitianDistinctCountAndOrbits) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    HermitianDomain D(q);
    const auto& F = D.field();
    std::set<Permutation> ys;
    for (Elem g = 1; g < F.q(); ++g)
      for (Elem d : F.norm_one_elements()) {
        const auto y = torus_element(D, g, d);
        EXPECT_EQ(y[0], 0u);
        EXPECT_EQ(y[1], 1u);
        ys.insert(y);
      }
    EXPECT_EQ(ys.size(), std::size_t{q} * q - 1);
    // orbits of one torus element away from the pair have length dividing q^2-1
    const auto y = torus_element(D, F.primitive_element(), 1);
    std::vector<bool> seen(D.size(), false);
    for (Point x = 2; x < D.size(); ++x) {
      if (seen[x]) continue;
      std::size_t len = 0;
      for (Point z = x; !seen[z]; z = y[z]) seen[z] = true, ++len;
      EXPECT_EQ((q * q - 1) % len, 0u);
    }
  }
  HermitianDomain D(3);
  EXPECT_THROW(torus_element(D, 0, 1), DomainError);
  EXPECT_THROW(torus_element(D, 1, D.field().primitive_element()), DomainError);
}

TEST(Torus, ReeOrbitsDivideQMinusOne) {
  ReeDomain D(27);
  const auto y = torus_element(D, D.field().primitive_element());
  std::vector<bool> seen(D.size(), false);
  for (Point x = 2; x < D.size(); x += 1) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Point z = x; !seen[z]; z = y[z]) seen[z] = true, ++len;
    EXPECT_EQ(26 % len, 0u);
  }
}

TEST(Generators, UnitaryMatricesPreserveTheForm) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    HermitianDomain D(q);
    for (bool full : {false, true})
      for (const auto& M : unitary_generator_matrices(D, full)) EXPECT_TRUE(D.preserves_form(M));
  }
}

TEST(Generators, MapTheDomainIntoItself) {
  // permutation constructors validate bijectivity; every image is a domain point by construction
  EXPECT_EQ(suzuki_generators(SuzukiDomain(8)).front().degree(), 65u);
  EXPECT_EQ(ree_generators(ReeDomain(27)).front().degree(), 19684u);
  SuzukiDomain S(8);
  const auto z = suzuki_involution(S);
  EXPECT_TRUE((z * z).is_identity());
  EXPECT_EQ(z[0], 1u);
}

TEST(BuildGroup, OrdersAndTransitivity) {
  struct Case {
    Family f;
    std::uint32_t q;
    std::uint64_t order;
  };
  for (const auto& c : std::vector<Case>{{Family::pgl2, 3, 24},
                                          {Family::pgl2, 8, 504},
                                          {Family::psl2, 5, 60},
                                          {Family::psl2, 4, 60},
                                          {Family::pgu3, 2, 216},
                                          {Family::psu3, 2, 72},
                                          {Family::pgu3, 3, 6048},
                                          {Family::sz, 8, 29120},
                                          {Family::sz, 2, 20},
                                          {Family::ree, 3, 1512}}) {
    const auto B = build_group(c.f, c.q);
    EXPECT_EQ(B.group.order(), c.order) << to_string(c.f) << " " << c.q;
    EXPECT_TRUE(B.order_verified);
    ASSERT_FALSE(B.group.certificates().empty());
    EXPECT_TRUE(B.group.certificates().front().holds());
    EXPECT_EQ(B.group.certificates().front().t, c.f == Family::pgl2 ? 3u : 2u);
  }
}

TEST(BuildGroup, SpecialInsideFullWithIndex) {
  for (std::uint32_t q : {2u, 5u}) {
    const auto G = build_group(Family::pgu3, q), S = build_group(Family::psu3, q);
    EXPECT_EQ(G.group.order() / S.group.order(), std::gcd(3u, q + 1));
    for (std::size_t i = 0; i < S.group.order(); i += 97) EXPECT_TRUE(G.group.contains(S.group.element(i)));
  }
}

TEST(BuildGroup, HNormalizesAndHasTheRightOrderModG) {
  const auto B = build_group(Family::pgu3, 4);
  const auto& D = std::get<HermitianDomain>(B.domain);
  const auto h = field_automorphism_h(D);
  for (const auto& g : B.group.generators()) EXPECT_TRUE(B.group.contains(inverse(h) * g * h));
  EXPECT_FALSE(B.group.contains(h));
  EXPECT_FALSE(B.group.contains(power(h, 2)));
  EXPECT_FALSE(B.group.contains(power(h, 3)));
  EXPECT_TRUE(B.group.contains(power(h, 4)));
  auto X = closure_generate([&] {
    auto g = B.group.generators();
    g.push_back(h);
    return g;
  }(), 1'000'000);
  EXPECT_EQ(X.order(), B.group.order() * 4);
}

TEST(BuildGroup, PolicyAndOverrides) {
  BuildOptions lazy;
  lazy.materialize = false;
  const auto S = build_group(Family::sz, 32, lazy);
  EXPECT_FALSE(S.group.materialized());
  EXPECT_EQ(S.group.order(), 32537600u);
  EXPECT_THROW(build_group(Family::sz, 32), InfeasibleError);
  EXPECT_THROW(build_group(Family::pgu3, 11), InfeasibleError);

  BuildOptions wrong;
  wrong.generators = std::vector<Permutation>{Permutation::identity(28)};
  EXPECT_THROW(build_group(Family::ree, 3, wrong), GroupError);
  BuildOptions bad_degree;
  bad_degree.generators = std::vector<Permutation>{Permutation::identity(5)};
  EXPECT_THROW(build_group(Family::ree, 3, bad_degree), GroupError);
}

TEST(Coset, SizesAndMaxima) {
  SuzukiDomain S(8);
  const auto cs = two_point_stabilizer_coset(S, field_automorphism_h(S));
  EXPECT_EQ(cs.size(), 7u);
  std::size_t mx = 0;
  for (const auto& c : cs) mx = std::max(mx, fix_count(c.element));
  EXPECT_EQ(mx, 5u);

  ReeDomain R(27);
  const auto hr = field_automorphism_h(R);
  const auto cr = two_point_stabilizer_coset(R, hr);
  EXPECT_EQ(cr.size(), 26u);
  std::size_t best = 0;
  Elem arg = 0;
  for (const auto& c : cr)
    if (fix_count(c.element) > best) best = fix_count(c.element), arg = c.params[0];
  EXPECT_EQ(best, 28u);
  EXPECT_EQ(arg, 1u);
  EXPECT_EQ(hamming(hr, torus_element(R, 1)), 19656u);

  HermitianDomain H(3);
  const auto ch = two_point_stabilizer_coset(H, field_automorphism_h(H));
  EXPECT_EQ(ch.size(), 8u);
  mx = 0;
  for (const auto& c : ch) mx = std::max(mx, fix_count(c.element));
  EXPECT_EQ(mx, 4u);
}
