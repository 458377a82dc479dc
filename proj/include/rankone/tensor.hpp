#pragma once

// Simple tensors of PG(1,q) points in PG(3,q) and of Hermitian-curve points
// in PG(8,q^2); graphs of permutations as ovoids, classical ovoids, the span
// and perp of a unitary graph, Minkowski-plane objects and the geometric
// covering radius.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rankone/linalg.hpp"
#include "rankone/parallel.hpp"
#include "rankone/rank_one.hpp"

namespace rankone {

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Ambient { pg3, pg8 };

inline std::string to_string(Ambient a) { return a == Ambient::pg3 ? "pg3" : "pg8"; }

inline Ambient parse_ambient(const std::string& s) {
  if (s == "pg3") return Ambient::pg3;
  if (s == "pg8") return Ambient::pg8;
  throw GeometryError("unknown ambient '" + s + "'");
}

inline std::size_t ambient_dim(Ambient a) { return a == Ambient::pg3 ? 4 : 9; }

struct ProjTensorPoint {
  Ambient ambient = Ambient::pg3;
  Row coords;

  auto operator<=>(const ProjTensorPoint&) const = default;
};

/// Scales so the last nonzero coordinate is 1.
inline ProjTensorPoint make_point(const FieldCtx& F, Ambient a, Row v) {
  if (v.size() != ambient_dim(a)) throw GeometryError("coordinate vector has the wrong length");
  auto it = std::find_if(v.rbegin(), v.rend(), [](Elem x) { return x != 0; });
  if (it == v.rend()) throw GeometryError("the zero vector is not a projective point");
  const Elem s = F.inv(*it);
  for (auto& x : v) x = F.mul(x, s);
  return {a, std::move(v)};
}

inline Row tensor(const FieldCtx& F, std::span<const Elem> u, std::span<const Elem> v) {
  Row out;
  out.reserve(u.size() * v.size());
  for (Elem a : u)
    for (Elem b : v) out.push_back(F.mul(a, b));
  return out;
}

inline ProjTensorPoint segre(const ProjectiveLine& L, Point x, Point y) {
  const Vec2 u = L.coords(x), v = L.coords(y);
  return make_point(L.field(), Ambient::pg3, tensor(L.field(), u, v));
}

inline ProjTensorPoint segre(const HermitianDomain& D, Point x, Point y) {
  const Vec3& u = D.coords(x);
  const Vec3& v = D.coords(y);
  return make_point(D.field(), Ambient::pg8, tensor(D.field(), u, v));
}

// ---- forms -------------------------------------------------------------------

enum class FormKind { quadric_q, bilinear_b, hermitian_bb };

struct FormSpec {
  FormKind kind;
  Ambient ambient;
};

inline Elem quadric_q(const FieldCtx& F, const Row& X) { return F.sub(F.mul(X[0], X[3]), F.mul(X[1], X[2])); }

inline Elem bilinear_b(const FieldCtx& F, const Row& X, const Row& Y) {
  Elem s = F.mul(X[0], Y[3]);
  s = F.sub(s, F.mul(X[1], Y[2]));
  s = F.sub(s, F.mul(X[2], Y[1]));
  return F.add(s, F.mul(X[3], Y[0]));
}

/// sum X_ij conj(Y_s(i)s(j)) with s swapping the first and third coordinates.
inline Elem hermitian_bb(const FieldCtx& F, const Row& X, const Row& Y) {
  constexpr std::array<int, 3> s{2, 1, 0};
  Elem acc = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc = F.add(acc, F.mul(X[i * 3 + j], F.conj(Y[s[i] * 3 + s[j]])));
  return acc;
}

inline Elem form_eval(const FieldCtx& F, const FormSpec& spec, const ProjTensorPoint& x,
                      const ProjTensorPoint* y = nullptr) {
  if (x.ambient != spec.ambient || (y && y->ambient != spec.ambient)) throw GeometryError("ambient mismatch");
  switch (spec.kind) {
    case FormKind::quadric_q:
      if (spec.ambient != Ambient::pg3) throw GeometryError("Q lives on PG(3,q)");
      return quadric_q(F, x.coords);
    case FormKind::bilinear_b:
      if (spec.ambient != Ambient::pg3) throw GeometryError("B lives on PG(3,q)");
      if (!y) throw GeometryError("B needs two arguments");
      return bilinear_b(F, x.coords, y->coords);
    case FormKind::hermitian_bb:
      if (spec.ambient != Ambient::pg8) throw GeometryError("the Hermitian tensor form lives on PG(8,q^2)");
      if (!y) throw GeometryError("the Hermitian tensor form needs two arguments");
      return hermitian_bb(F, x.coords, y->coords);
  }
  return 0;
}

inline FormSpec ambient_form(Ambient a) {
  return a == Ambient::pg3 ? FormSpec{FormKind::bilinear_b, a} : FormSpec{FormKind::hermitian_bb, a};
}

inline bool orthogonal(const FieldCtx& F, const ProjTensorPoint& x, const ProjTensorPoint& y) {
  return form_eval(F, ambient_form(x.ambient), x, &y) == 0;
}

// ---- ovoids ------------------------------------------------------------------

struct Ovoid {
  Ambient ambient = Ambient::pg3;
  std::vector<ProjTensorPoint> members;
  std::optional<Permutation> origin;
};

inline bool pairwise_non_orthogonal(const FieldCtx& F, const Ovoid& O) {
  for (std::size_t i = 0; i < O.members.size(); ++i)
    for (std::size_t j = i + 1; j < O.members.size(); ++j)
      if (orthogonal(F, O.members[i], O.members[j])) return false;
  return true;
}

template <typename Dom>
Ovoid graph_of(const Dom& D, const Permutation& pi, bool check = true) {
  if (pi.degree() != D.size()) throw GeometryError("permutation degree does not match the source domain");
  Ovoid O{std::is_same_v<Dom, ProjectiveLine> ? Ambient::pg3 : Ambient::pg8, {}, pi};
  O.members.reserve(D.size());
  for (Point x = 0; x < D.size(); ++x) O.members.push_back(segre(D, x, pi[x]));
  if (check && !pairwise_non_orthogonal(D.field(), O))
    throw GeometryError("graph has two orthogonal members");
  return O;
}

namespace detail {
template <typename Dom>
auto factor_vector(const Dom&, const Row& v) {
  if constexpr (std::is_same_v<Dom, ProjectiveLine>) {
    return Vec2{v[0], v[1]};
  } else {
    return Vec3{v[0], v[1], v[2]};
  }
}
}  // namespace detail

/// Recovers pi with graph(pi) = O. Each member is factored as u (x) v; u and v
/// must be source points, first factors must be distinct, second ones too.
template <typename Dom>
Permutation ovoid_to_permutation(const Dom& D, const Ovoid& O) {
  const auto& F = D.field();
  const std::size_t k = std::is_same_v<Dom, ProjectiveLine> ? 2 : 3;
  const std::size_t n = D.size();
  if (O.members.size() != n) throw GeometryError("ovoid is incomplete");
  std::vector<Point> img(n, static_cast<Point>(n));
  std::vector<bool> used(n, false);
  for (const auto& X : O.members) {
    if (X.coords.size() != k * k) throw GeometryError("member lies in the wrong ambient");
    std::size_t pi = k, pj = k;
    for (std::size_t t = 0; t < k * k && pi == k; ++t)
      if (X.coords[t] != 0) pi = t / k, pj = t % k;
    if (pi == k) throw GeometryError("zero member");
    const Elem piv = X.coords[pi * k + pj];
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        if (F.mul(X.coords[r * k + c], piv) != F.mul(X.coords[r * k + pj], X.coords[pi * k + c]))
          throw GeometryError("member is not a simple tensor");
    Row u(k), v(k);
    for (std::size_t r = 0; r < k; ++r) u[r] = X.coords[r * k + pj];
    for (std::size_t c = 0; c < k; ++c) v[c] = X.coords[pi * k + c];
    Point a, b;
    try {
      a = D.index_of(detail::factor_vector(D, u));
      b = D.index_of(detail::factor_vector(D, v));
    } catch (const std::exception&) {
      throw GeometryError("member is not a simple tensor of source points");
    }
    if (img[a] != n) throw GeometryError("repeated first factor");
    if (used[b]) throw GeometryError("repeated second factor (two members are orthogonal)");
    img[a] = b;
    used[b] = true;
  }
  return Permutation(std::move(img));
}

// ---- classical ovoids --------------------------------------------------------

struct ClassicalCertificate {
  bool classical = false;
  std::array<Elem, 4> mobius{};      // (a,b,c,d), pg3 only
  Row plane;                         // [b,-d,a,-c], pg3 only
  bool plane_contains_all = false;
  std::size_t plane_quadric_points = 0;
};

/// All normalized (a,b,c,d) with ad - bc != 0, last nonzero entry 1.
inline std::vector<std::array<Elem, 4>> mobius_parameters(const FieldCtx& F) {
  std::vector<std::array<Elem, 4>> out;
  const Elem q = F.q();
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      for (Elem c = 0; c < q; ++c)
        for (Elem d = 0; d < q; ++d) {
          const std::array<Elem, 4> m{a, b, c, d};
          auto it = std::find_if(m.rbegin(), m.rend(), [](Elem x) { return x != 0; });
          if (it == m.rend() || *it != 1) continue;
          if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) continue;
          out.push_back(m);
        }
  return out;
}

inline Row conic_plane(const FieldCtx& F, const std::array<Elem, 4>& m) {
  return {m[1], F.neg(m[3]), m[0], F.neg(m[2])};
}

inline Elem dot(const FieldCtx& F, const Row& u, const Row& v) {
  Elem s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s = F.add(s, F.mul(u[i], v[i]));
  return s;
}

/// Points of PG(3,q) on the quadric Q = 0.
inline std::vector<Row> quadric_points(const FieldCtx& F) {
  std::vector<Row> out;
  const Elem q = F.q();
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      for (Elem c = 0; c < q; ++c)
        for (Elem d = 0; d < q; ++d) {
          Row v{a, b, c, d};
          auto it = std::find_if(v.rbegin(), v.rend(), [](Elem x) { return x != 0; });
          if (it == v.rend() || *it != 1) continue;
          if (quadric_q(F, v) == 0) out.push_back(v);
        }
  return out;
}

inline ClassicalCertificate is_classical(const ProjectiveLine& L, const Ovoid& O) {
  const Permutation pi = ovoid_to_permutation(L, O);
  const auto& F = L.field();
  ClassicalCertificate cert;
  for (const auto& m : mobius_parameters(F)) {
    if (L.mobius(m[0], m[1], m[2], m[3]) != pi) continue;
    cert.classical = true;
    cert.mobius = m;
    cert.plane = conic_plane(F, m);
    cert.plane_contains_all = std::all_of(O.members.begin(), O.members.end(),
                                          [&](const auto& X) { return dot(F, cert.plane, X.coords) == 0; });
    for (const auto& X : quadric_points(F))
      if (dot(F, cert.plane, X) == 0) ++cert.plane_quadric_points;
    break;
  }
  return cert;
}

/// pg8: classical iff the graphed permutation lies in PGU(3,q).
inline ClassicalCertificate is_classical(const HermitianDomain& D, const Ovoid& O, const GroupHandle& pgu) {
  ClassicalCertificate cert;
  cert.classical = pgu.contains(ovoid_to_permutation(D, O));
  return cert;
}

// ---- span and perp -----------------------------------------------------------

struct SpanPerp {
  std::size_t span_dim = 0;            // projective
  std::size_t perp_dim = 0;            // projective
  std::vector<Row> perp_basis;
  std::size_t perp_segre_points = 0;   // points of the perp that are simple tensors
  std::optional<bool> equals_alternating;
  bool totally_isotropic = false;
  bool nondegenerate = false;
};

inline std::vector<Row> alternating_basis(const FieldCtx& F) {
  std::vector<Row> out;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Row v(9, 0);
      v[i * 3 + j] = 1;
      v[j * 3 + i] = F.neg(1);
      out.push_back(v);
    }
  return out;
}

inline bool is_simple_tensor(const FieldCtx& F, const Row& X) {
  std::vector<Row> m{{X[0], X[1], X[2]}, {X[3], X[4], X[5]}, {X[6], X[7], X[8]}};
  return rank(F, m) == 1;
}

/// Span of graph(f) and its perp under the Hermitian tensor form. When a
/// materialized PGU(3,q) is given, f must lie in it.
inline SpanPerp span_and_perp(const HermitianDomain& D, const Ovoid& O, const GroupHandle* pgu = nullptr) {
  const auto& F = D.field();
  if (O.ambient != Ambient::pg8) throw GeometryError("span_and_perp needs a PG(8,q^2) ovoid");
  const Permutation f = ovoid_to_permutation(D, O);
  if (pgu && !pgu->contains(f)) throw GeometryError("graphed permutation is not in PGU(3,q)");
  SpanPerp r;
  std::vector<Row> rows;
  for (const auto& X : O.members) rows.push_back(X.coords);
  r.span_dim = rank(F, rows) - 1;

  // (bb)(X, Y) = sum X_ij Z_s(i)s(j) with Z = conj(Y): linear in Z.
  constexpr std::array<int, 3> s{2, 1, 0};
  std::vector<Row> eqs;
  for (const auto& X : rows) {
    Row e(9, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) e[s[i] * 3 + s[j]] = X[i * 3 + j];
    eqs.push_back(e);
  }
  for (auto& z : nullspace(F, eqs, 9)) {
    for (auto& x : z) x = F.conj(x);
    r.perp_basis.push_back(z);
  }
  r.perp_dim = r.perp_basis.size() - 1;

  // Every projective point of the perp, checked for being a simple tensor.
  const std::size_t k = r.perp_basis.size();
  std::vector<Elem> coef(k, 0);
  const Elem Q = F.q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= Q;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < k; ++i) coef[i] = static_cast<Elem>(c % Q), c /= Q;
    auto it = std::find_if(coef.rbegin(), coef.rend(), [](Elem x) { return x != 0; });
    if (*it != 1) continue;
    Row v(9, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < 9; ++t) v[t] = F.add(v[t], F.mul(coef[i], r.perp_basis[i][t]));
    if (is_simple_tensor(F, v)) ++r.perp_segre_points;
  }

  if (f.is_identity()) {
    const auto A = alternating_basis(F);
    bool eq = A.size() == k;
    for (const auto& a : A) eq = eq && in_span(F, r.perp_basis, a);
    r.equals_alternating = eq;
  }

  std::vector<Row> gram(k, Row(k));
  bool zero = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      gram[i][j] = hermitian_bb(F, r.perp_basis[i], r.perp_basis[j]);
      zero = zero && gram[i][j] == 0;
    }
  r.totally_isotropic = zero;
  r.nondegenerate = determinant(F, gram) != 0;
  return r;
}

// ---- Minkowski plane ---------------------------------------------------------

struct MinkowskiPlane {
  std::uint32_t q = 0;
  std::vector<ProjTensorPoint> points;                   // index x*(q+1)+y is X(x) (x) X(y)
  std::vector<std::vector<std::size_t>> lines;           // both rulings
  std::vector<std::vector<std::size_t>> circles;         // graph(mu), mu in PGL(2,q)
  std::vector<std::array<Elem, 4>> circle_params;
  std::size_t nontangent_planes = 0;                     // plane sections with q+1 points
  bool circles_are_plane_sections = false;
};

inline MinkowskiPlane minkowski_objects(std::uint32_t q) {
  ProjectiveLine L(q);
  const auto& F = L.field();
  const std::size_t n = L.size();
  MinkowskiPlane M;
  M.q = q;
  std::map<Row, std::size_t> index;
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      M.points.push_back(segre(L, x, y));
      index[M.points.back().coords] = M.points.size() - 1;
    }
  for (Point x = 0; x < n; ++x) {
    std::vector<std::size_t> a, b;
    for (Point y = 0; y < n; ++y) {
      a.push_back(x * n + y);
      b.push_back(y * n + x);
    }
    M.lines.push_back(a);
    M.lines.push_back(b);
  }
  std::set<std::vector<std::size_t>> seen;
  for (const auto& m : mobius_parameters(F)) {
    const Permutation mu = L.mobius(m[0], m[1], m[2], m[3]);
    std::vector<std::size_t> c;
    for (Point x = 0; x < n; ++x) c.push_back(x * n + mu[x]);
    if (!seen.insert(c).second) continue;
    M.circles.push_back(c);
    M.circle_params.push_back(m);
  }

  // Independent oracle: plane sections of the quadric with exactly q+1 points.
  const auto quad = quadric_points(F);
  std::set<std::vector<std::size_t>> sections;
  const Elem Q = F.q();
  for (Elem a = 0; a < Q; ++a)
    for (Elem b = 0; b < Q; ++b)
      for (Elem c = 0; c < Q; ++c)
        for (Elem d = 0; d < Q; ++d) {
          Row u{a, b, c, d};
          auto it = std::find_if(u.rbegin(), u.rend(), [](Elem x) { return x != 0; });
          if (it == u.rend() || *it != 1) continue;
          std::vector<std::size_t> sec;
          for (const auto& X : quad)
            if (dot(F, u, X) == 0) sec.push_back(index.at(X));
          if (sec.size() != n) continue;
          std::sort(sec.begin(), sec.end());
          sections.insert(sec);
        }
  M.nontangent_planes = sections.size();
  std::set<std::vector<std::size_t>> circ;
  for (auto c : M.circles) {
    std::sort(c.begin(), c.end());
    circ.insert(c);
  }
  M.circles_are_plane_sections = circ == sections;
  return M;
}

/// Every graph(pi) meets every ruling line exactly once.
inline bool meets_every_line_once(const MinkowskiPlane& M, const Permutation& pi) {
  const std::size_t n = M.q + 1;
  std::vector<bool> in(n * n, false);
  for (Point x = 0; x < n; ++x) in[x * n + pi[x]] = true;
  for (const auto& line : M.lines) {
    std::size_t hits = 0;
    for (std::size_t p : line) hits += in[p];
    if (hits != 1) return false;
  }
  return true;
}

// ---- geometric covering radius ----------------------------------------------

struct GeometricCoveringRadius {
  Ambient ambient = Ambient::pg3;
  std::uint32_t q = 0;
  std::size_t radius = 0;          // n - min over ovoids of max over classical ovoids of |O cap C|
  std::size_t min_max = 0;
  std::size_t max_min = 0;         // the other order of quantifiers, reported raw
  Permutation witness;             // graphed permutation attaining min_max
  std::size_t ovoids = 0;
  std::size_t classical = 0;
};

namespace detail {
struct PointSet {
  std::array<std::uint64_t, 2> w{};
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t meet(const PointSet& o) const {
    return static_cast<std::size_t>(std::popcount(w[0] & o.w[0]) + std::popcount(w[1] & o.w[1]));
  }
};
}  // namespace detail

/// Sweeps every ovoid graph(pi) against every classical ovoid, with point
/// identities taken from the Segre images.
inline GeometricCoveringRadius covering_radius_geometric(std::uint32_t q, Ambient amb, unsigned workers = 1) {
  if (amb == Ambient::pg3 && q > 7) throw InfeasibleError("pg3 geometric covering radius supports q <= 7");
  if (amb == Ambient::pg8 && q != 2) throw InfeasibleError("pg8 geometric covering radius supports q = 2 only");
  GeometricCoveringRadius out;
  out.ambient = amb;
  out.q = q;

  std::size_t n = 0;
  std::vector<std::size_t> pid;   // pid[x*n+y] = id of segre(x,y)
  std::vector<Permutation> classical;
  auto index_points = [&](const auto& D) {
    n = D.size();
    std::map<Row, std::size_t> ids;
    pid.resize(n * n);
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y) pid[x * n + y] = ids.emplace(segre(D, x, y).coords, ids.size()).first->second;
    if (ids.size() != n * n) throw GeometryError("Segre map is not injective");
  };
  if (amb == Ambient::pg3) {
    ProjectiveLine L(q);
    index_points(L);
    for (const auto& m : mobius_parameters(L.field())) classical.push_back(L.mobius(m[0], m[1], m[2], m[3]));
    std::sort(classical.begin(), classical.end());
    classical.erase(std::unique(classical.begin(), classical.end()), classical.end());
  } else {
    HermitianDomain D(q);
    index_points(D);
    auto B = build_group(Family::pgu3, q);
    for (std::size_t i = 0; i < B.group.order(); ++i) classical.push_back(B.group.element(i));
  }
  auto graph_set = [&](std::span<const Point> pi) {
    detail::PointSet s;
    for (Point x = 0; x < n; ++x) s.set(pid[x * n + pi[x]]);
    return s;
  };
  std::vector<detail::PointSet> csets;
  for (const auto& c : classical) csets.push_back(graph_set(c.images()));
  out.classical = csets.size();

  struct Part {
    std::size_t min_max = SIZE_MAX, max_min = 0, count = 0;
    std::vector<Point> witness;
  };
  std::vector<Part> parts(n);
  for_each_partition(n, workers, [&](std::size_t first) {
    Part& P = parts[first];
    std::vector<Point> v(n);
    v[0] = static_cast<Point>(first);
    for (std::size_t i = 1, x = 0; i < n; ++i, ++x) {
      if (x == first) ++x;
      v[i] = static_cast<Point>(x);
    }
    do {
      const auto O = graph_set(v);
      std::size_t mx = 0, mn = SIZE_MAX;
      for (const auto& C : csets) {
        const std::size_t m = O.meet(C);
        mx = std::max(mx, m);
        mn = std::min(mn, m);
      }
      ++P.count;
      if (mx < P.min_max) {
        P.min_max = mx;
        P.witness = v;
      }
      P.max_min = std::max(P.max_min, mn);
    } while (std::next_permutation(v.begin() + 1, v.end()));
  });
  std::size_t best = 0;
  out.min_max = SIZE_MAX;
  for (std::size_t i = 0; i < n; ++i) {
    out.ovoids += parts[i].count;
    out.max_min = std::max(out.max_min, parts[i].max_min);
    if (parts[i].min_max < out.min_max) out.min_max = parts[i].min_max, best = i;
  }
  out.radius = n - out.min_max;
  out.witness = Permutation(parts[best].witness);
  return out;
}

}  // namespace rankone
