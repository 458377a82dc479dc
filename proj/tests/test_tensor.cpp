#include <gtest/gtest.h>

#include <set>

#include "rankone/rank_one.hpp"
#include "rankone/tensor.hpp"

using namespace rankone;

TEST(Segre, BasisExample) {
  auto F = make_field(3, 1);
  const Vec2 u{1, 0}, v{0, 1};
  const auto X = make_point(F, Ambient::pg3, tensor(F, u, v));
  EXPECT_EQ(X.coords, (Row{0, 1, 0, 0}));
}

TEST(Segre, ImagesLieOnTheQuadricAndAreDistinct) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    ProjectiveLine L(q);
    std::set<ProjTensorPoint> seen;
    for (Point x = 0; x < L.size(); ++x)
      for (Point y = 0; y < L.size(); ++y) {
        const auto X = segre(L, x, y);
        EXPECT_EQ(quadric_q(L.field(), X.coords), 0u);
        EXPECT_TRUE(seen.insert(X).second);
      }
    EXPECT_EQ(seen.size(), quadric_points(L.field()).size());
  }
}

TEST(Segre, HermitianImagesAreDistinctSimpleTensors) {
  HermitianDomain D(2);
  std::set<ProjTensorPoint> seen;
  for (Point x = 0; x < D.size(); ++x)
    for (Point y = 0; y < D.size(); ++y) {
      const auto X = segre(D, x, y);
      EXPECT_TRUE(is_simple_tensor(D.field(), X.coords));
      seen.insert(X);
    }
  EXPECT_EQ(seen.size(), 81u);
}

TEST(Forms, ValuesAndErrors) {
  auto F = make_field(5, 1);
  EXPECT_EQ(quadric_q(F, {1, 0, 0, 1}), 1u);
  const auto X = make_point(F, Ambient::pg3, {1, 0, 0, 1});
  const FormSpec q{FormKind::quadric_q, Ambient::pg3};
  const FormSpec b{FormKind::bilinear_b, Ambient::pg3};
  const FormSpec h{FormKind::hermitian_bb, Ambient::pg8};
  EXPECT_EQ(form_eval(F, q, X), 1u);
  EXPECT_THROW(form_eval(F, b, X), GeometryError);
  EXPECT_THROW(form_eval(F, h, X, &X), GeometryError);
  EXPECT_THROW(make_point(F, Ambient::pg3, {0, 0, 0, 0}), GeometryError);
  EXPECT_THROW(make_point(F, Ambient::pg8, {1, 0, 0, 0}), GeometryError);
  EXPECT_THROW(parse_ambient("pg4"), GeometryError);
}

TEST(Forms, BilinearIsPolarOfQAndScaleInvariant) {
  auto F = make_field(7, 1);
  ProjectiveLine L(7);
  for (Point a = 0; a < L.size(); ++a)
    for (Point b = 0; b < L.size(); ++b) {
      const auto X = segre(L, a, b);
      Row Y = X.coords;
      for (auto& y : Y) y = F.mul(y, 3);
      EXPECT_EQ(bilinear_b(F, X.coords, X.coords), F.mul(2, quadric_q(F, X.coords)));
      EXPECT_EQ(bilinear_b(F, Y, Y) == 0, bilinear_b(F, X.coords, X.coords) == 0);
    }
}

TEST(Forms, SegrePointsOrthogonalIffTheyShareAFactor) {
  ProjectiveLine L(5);
  const auto& F = L.field();
  for (Point a = 0; a < L.size(); ++a)
    for (Point b = 0; b < L.size(); ++b)
      for (Point c = 0; c < L.size(); ++c)
        for (Point d = 0; d < L.size(); ++d)
          EXPECT_EQ(orthogonal(F, segre(L, a, b), segre(L, c, d)), a == c || b == d);
  HermitianDomain D(2);
  for (Point a = 0; a < D.size(); a += 2)
    for (Point b = 0; b < D.size(); ++b)
      for (Point c = 0; c < D.size(); ++c)
        for (Point d = 0; d < D.size(); d += 3)
          EXPECT_EQ(orthogonal(D.field(), segre(D, a, b), segre(D, c, d)), a == c || b == d);
}

TEST(Ovoid, RoundTripAllOfPGU32) {
  const auto B = build_group(Family::pgu3, 2);
  const auto& D = std::get<HermitianDomain>(B.domain);
  for (std::size_t i = 0; i < B.group.order(); ++i) {
    const auto& g = B.group.element(i);
    const auto O = graph_of(D, g);
    EXPECT_TRUE(pairwise_non_orthogonal(D.field(), O));
    EXPECT_EQ(ovoid_to_permutation(D, O), g);
    EXPECT_TRUE(is_classical(D, O, B.group).classical);
  }
  EXPECT_FALSE(is_classical(D, graph_of(D, field_automorphism_h(D)), B.group).classical);
}

TEST(Ovoid, RejectsBadMembers) {
  ProjectiveLine L(3);
  const auto& F = L.field();
  auto O = graph_of(L, Permutation::identity(4));
  auto bad = O;
  bad.members[1] = segre(L, 2, 2);  // repeated second factor
  bad.members[2] = segre(L, 3, 1);
  EXPECT_THROW(ovoid_to_permutation(L, bad), GeometryError);
  auto dup = O;
  dup.members[1] = segre(L, 0, 1);
  EXPECT_THROW(ovoid_to_permutation(L, dup), GeometryError);
  auto nonsimple = O;
  nonsimple.members[0] = make_point(F, Ambient::pg3, {1, 0, 0, 1});
  EXPECT_THROW(ovoid_to_permutation(L, nonsimple), GeometryError);
  EXPECT_THROW(graph_of(L, Permutation::identity(5)), GeometryError);
}

TEST(Classical, ExactlyTheMobiusGraphs) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    ProjectiveLine L(q);
    const std::size_t n = L.size();
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::size_t classical = 0;
    do {
      const Permutation pi(img);
      const auto c = is_classical(L, graph_of(L, pi));
      if (c.classical) {
        ++classical;
        EXPECT_TRUE(c.plane_contains_all);
        EXPECT_EQ(c.plane_quadric_points, n);
      }
    } while (std::next_permutation(img.begin(), img.end()));
    EXPECT_EQ(classical, std::size_t{q} * (q * q - 1)) << q;
  }
}

TEST(Classical, IdentityPlane) {
  ProjectiveLine L(5);
  const auto c = is_classical(L, graph_of(L, Permutation::identity(6)));
  ASSERT_TRUE(c.classical);
  EXPECT_EQ(c.plane, (Row{0, 4, 1, 0}));
  EXPECT_EQ(c.plane_quadric_points, 6u);
}

TEST(SpanPerp, SmallHermitianCases) {
  for (std::uint32_t q : {2u, 3u}) {
    HermitianDomain D(q);
    const auto r = span_and_perp(D, graph_of(D, Permutation::identity(D.size())));
    EXPECT_EQ(r.span_dim, 5u);
    EXPECT_EQ(r.perp_dim, 2u);
    EXPECT_EQ(r.perp_segre_points, 0u);
    ASSERT_TRUE(r.equals_alternating);
    EXPECT_TRUE(*r.equals_alternating);
  }
}

TEST(Minkowski, CircleCountsAndIntersections) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto M = minkowski_objects(q);
    EXPECT_EQ(M.points.size(), std::size_t{q + 1} * (q + 1));
    EXPECT_EQ(M.lines.size(), 2u * (q + 1));
    EXPECT_EQ(M.circles.size(), std::size_t{q} * (q * q - 1));
    EXPECT_EQ(M.nontangent_planes, M.circles.size());
    EXPECT_TRUE(M.circles_are_plane_sections);
    for (std::size_t i = 0; i < M.circles.size(); ++i)
      for (std::size_t j = i + 1; j < M.circles.size(); j += 3) {
        std::set<std::size_t> a(M.circles[i].begin(), M.circles[i].end());
        std::size_t common = 0;
        for (auto p : M.circles[j]) common += a.count(p);
        EXPECT_LE(common, 2u);
      }
  }
  const auto M = minkowski_objects(3);
  EXPECT_TRUE(meets_every_line_once(M, Permutation({1, 0, 3, 2})));
}

TEST(GeometricCoveringRadius, SmallCases) {
  const auto a = covering_radius_geometric(3, Ambient::pg3);
  EXPECT_EQ(a.ovoids, 24u);
  EXPECT_EQ(a.classical, 24u);
  EXPECT_EQ(a.radius, 0u);
  const auto b = covering_radius_geometric(4, Ambient::pg3);
  EXPECT_EQ(b.radius, 2u);
  EXPECT_EQ(b.ovoids, 120u);
  EXPECT_THROW(covering_radius_geometric(3, Ambient::pg8), InfeasibleError);
  EXPECT_THROW(covering_radius_geometric(11, Ambient::pg3), InfeasibleError);
}
