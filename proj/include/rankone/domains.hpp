#pragma once

// Indexed point sets for the rank-one 2-transitive actions. Every domain
// reserves indices 0 and 1 for the distinguished pair used by the stabilizer
// arguments (<e1>, <e3> on the Hermitian curve; infinity and the origin for
// the Suzuki and Ree sets). The projective line only fixes index 0 = infinity.

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rankone/field.hpp"
#include "rankone/permutation.hpp"

namespace rankone {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PrimePower {
  unsigned p = 0;
  unsigned f = 0;
};

inline PrimePower prime_power(std::uint64_t q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p) continue;
    if (!detail::is_prime(p)) break;
    unsigned f = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++f;
    }
    if (r != 1) break;
    return {p, f};
  }
  throw DomainError(std::to_string(q) + " is not a prime power");
}

using Vec2 = std::array<Elem, 2>;
using Vec3 = std::array<Elem, 3>;
using Mat3 = std::array<Vec3, 3>;

/// PG(1,q): index 0 is infinity, index 1 + t is the point t of GF(q).
/// Homogeneous coordinates follow t = X2/X1, so t <-> (1, t) and
/// infinity <-> (0, 1); this is the convention under which the graph of a
/// Moebius map lies in the plane [b, -d, a, -c].
class ProjectiveLine {
 public:
  static constexpr Point kInfinity = 0;

  explicit ProjectiveLine(std::uint32_t q, std::optional<std::vector<unsigned>> modulus = std::nullopt)
      : field_(make(q, std::move(modulus))) {}

  const FieldCtx& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  std::size_t size() const { return field_.q() + 1; }

  Point point_of(Elem t) const { return t + 1; }
  bool is_infinity(Point x) const { return x == kInfinity; }
  Elem value(Point x) const {
    if (x == kInfinity) throw DomainError("infinity has no affine value");
    return x - 1;
  }

  Vec2 coords(Point x) const { return x == kInfinity ? Vec2{0, 1} : Vec2{1, static_cast<Elem>(x - 1)}; }

  Point index_of(const Vec2& v) const {
    if (v[0] == 0) {
      if (v[1] == 0) throw DomainError("zero vector is not a projective point");
      return kInfinity;
    }
    return point_of(field_.div(v[1], v[0]));
  }

  /// t -> (a t + b) / (c t + d).
  Permutation mobius(Elem a, Elem b, Elem c, Elem d) const {
    const auto& F = field_;
    if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) throw DomainError("singular Moebius matrix");
    std::vector<Point> im(size());
    for (Point x = 0; x < size(); ++x) {
      const Vec2 v = coords(x);
      im[x] = index_of({F.add(F.mul(c, v[1]), F.mul(d, v[0])), F.add(F.mul(a, v[1]), F.mul(b, v[0]))});
    }
    return Permutation(std::move(im));
  }

 private:
  static FieldCtx make(std::uint32_t q, std::optional<std::vector<unsigned>> modulus) {
    const auto pp = prime_power(q);
    return FieldCtx(pp.p, pp.f, std::move(modulus));
  }

  FieldCtx field_;
};

/// Isotropic points of x1 y3^q + x2 y2^q + x3 y1^q over GF(q^2): index 0 is
/// <(1,0,0)>, index 1 is <(0,0,1)>, then <(a,b,1)> in lexicographic (a,b).
class HermitianDomain {
 public:
  explicit HermitianDomain(std::uint32_t q, std::optional<std::vector<unsigned>> base_modulus = std::nullopt)
      : q_(q), pp_(prime_power(q)), field_(FieldCtx::quadratic_extension(pp_.p, pp_.f, std::move(base_modulus))) {
    const std::uint32_t Q = field_.q();
    affine_index_.assign(std::size_t{Q} * Q, kAbsent);
    points_.push_back({1, 0, 0});
    points_.push_back({0, 0, 1});
    affine_index_[0] = 1;
    for (Elem a = 0; a < Q; ++a) {
      for (Elem b = 0; b < Q; ++b) {
        if (a == 0 && b == 0) continue;
        if (field_.add(field_.trace(a), field_.norm(b)) != 0) continue;
        affine_index_[std::size_t{a} * Q + b] = static_cast<Point>(points_.size());
        points_.push_back({a, b, 1});
      }
    }
    if (points_.size() != std::size_t{q} * q * q + 1) throw DomainError("Hermitian curve has the wrong size");
  }

  const FieldCtx& field() const { return field_; }
  std::uint32_t q() const { return q_; }
  unsigned p() const { return pp_.p; }
  unsigned f() const { return pp_.f; }
  std::size_t size() const { return points_.size(); }
  const Vec3& coords(Point i) const { return points_.at(i); }
  const std::vector<Vec3>& points() const { return points_; }

  /// Hermitian form x1 y3^q + x2 y2^q + x3 y1^q.
  Elem form(const Vec3& x, const Vec3& y) const {
    const auto& F = field_;
    return F.add(F.add(F.mul(x[0], F.conj(y[2])), F.mul(x[1], F.conj(y[1]))), F.mul(x[2], F.conj(y[0])));
  }

  bool is_isotropic(const Vec3& v) const { return form(v, v) == 0; }

  /// Scales so the last nonzero coordinate is 1.
  Vec3 normalize(Vec3 v) const {
    for (std::size_t i = 3; i-- > 0;) {
      if (v[i] != 0) {
        const Elem s = field_.inv(v[i]);
        for (auto& x : v) x = field_.mul(x, s);
        return v;
      }
    }
    throw DomainError("zero vector is not a projective point");
  }

  Point index_of(const Vec3& v) const {
    const Vec3 n = normalize(v);
    if (n[2] == 1) {
      const Point r = affine_index_[std::size_t{n[0]} * field_.q() + n[1]];
      if (r == kAbsent) throw DomainError("point is not on the Hermitian curve");
      return r;
    }
    if (n[1] == 0 && n[0] == 1) return 0;
    throw DomainError("point is not on the Hermitian curve");
  }

  Vec3 apply(const Mat3& M, const Vec3& x) const {
    Vec3 y{0, 0, 0};
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < 3; ++i) y[j] = field_.add(y[j], field_.mul(x[i], M[i][j]));
    return y;
  }

  /// Permutation induced by x -> x M on row vectors.
  Permutation permutation_of(const Mat3& M) const {
    std::vector<Point> im(size());
    for (Point i = 0; i < size(); ++i) im[i] = index_of(apply(M, points_[i]));
    return Permutation(std::move(im));
  }

  /// True when B(xM, yM) = lambda B(x, y) for a fixed nonzero lambda in GF(q).
  bool preserves_form(const Mat3& M) const {
    std::optional<Elem> lambda;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        Vec3 ei{0, 0, 0}, ej{0, 0, 0};
        ei[i] = 1;
        ej[j] = 1;
        const Elem before = form(ei, ej);
        const Elem after = form(apply(M, ei), apply(M, ej));
        if (before == 0) {
          if (after != 0) return false;
          continue;
        }
        const Elem l = field_.div(after, before);
        if (lambda && *lambda != l) return false;
        lambda = l;
      }
    }
    return lambda && *lambda != 0 && field_.in_base(*lambda);
  }

 private:
  static constexpr Point kAbsent = ~Point{0};

  std::uint32_t q_;
  PrimePower pp_;
  FieldCtx field_;
  std::vector<Vec3> points_;
  std::vector<Point> affine_index_;
};

namespace detail {

inline unsigned odd_exponent_m(std::uint32_t q, unsigned p, const char* what) {
  const auto pp = prime_power(q);
  if (pp.p != p || pp.f % 2 == 0) throw DomainError(std::string(what) + " needs q = " + std::to_string(p) + "^(2m+1)");
  return (pp.f - 1) / 2;
}

}  // namespace detail

/// Tits ovoid points {(a,b,c) : c = ab + a^(l+2) + b^l} plus infinity,
/// q = 2^(2m+1), l = 2^(m+1). Index 0 is infinity, index 1 + a q + b is (a,b,c).
class SuzukiDomain {
 public:
  static constexpr Point kInfinity = 0;
  static constexpr Point kOrigin = 1;

  explicit SuzukiDomain(std::uint32_t q, std::optional<std::vector<unsigned>> modulus = std::nullopt)
      : m_(detail::odd_exponent_m(q, 2, "Suzuki domain")), field_(2, 2 * m_ + 1, std::move(modulus)) {
    ell_ = 1u << (m_ + 1);
  }

  const FieldCtx& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  unsigned m() const { return m_; }
  unsigned ell() const { return ell_; }
  std::size_t size() const { return std::size_t{q()} * q() + 1; }

  Elem c_of(Elem a, Elem b) const {
    const auto& F = field_;
    return F.add(F.add(F.mul(a, b), F.pow(a, ell_ + 2)), F.pow(b, ell_));
  }

  Point index_of(Elem a, Elem b) const { return 1 + a * q() + b; }
  Vec3 coords(Point x) const {
    if (x == kInfinity) throw DomainError("infinity has no affine coordinates");
    const Elem a = (x - 1) / q(), b = (x - 1) % q();
    return {a, b, c_of(a, b)};
  }

 private:
  unsigned m_;
  unsigned ell_ = 0;
  FieldCtx field_;
};

/// Ree unital points (a,b,c,l1,l2,l3) plus infinity, q = 3^(2m+1),
/// l = 3^(m+1). Index 0 is infinity, index 1 + (a q + b) q + c is (a,b,c).
class ReeDomain {
 public:
  static constexpr Point kInfinity = 0;
  static constexpr Point kOrigin = 1;

  explicit ReeDomain(std::uint32_t q, std::optional<std::vector<unsigned>> modulus = std::nullopt)
      : m_(detail::odd_exponent_m(q, 3, "Ree domain")), field_(3, 2 * m_ + 1, std::move(modulus)) {
    ell_ = 1;
    for (unsigned i = 0; i <= m_; ++i) ell_ *= 3;
  }

  const FieldCtx& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  unsigned m() const { return m_; }
  unsigned ell() const { return ell_; }
  std::size_t size() const { return std::size_t{q()} * q() * q() + 1; }

  Point index_of(Elem a, Elem b, Elem c) const { return 1 + (a * q() + b) * q() + c; }
  Vec3 coords(Point x) const {
    if (x == kInfinity) throw DomainError("infinity has no affine coordinates");
    const Elem r = x - 1;
    return {r / (q() * q()), r / q() % q(), r % q()};
  }

  /// (l1, l2, l3) at (a, b, c).
  Vec3 lambdas(Elem a, Elem b, Elem c) const {
    const auto& F = field_;
    const unsigned l = ell_;
    auto sum = [&](std::initializer_list<Elem> xs) {
      Elem r = 0;
      for (Elem x : xs) r = F.add(r, x);
      return r;
    };
    const Elem l1 = sum({F.mul(F.mul(a, a), b), F.neg(F.mul(a, c)), F.pow(b, l), F.neg(F.pow(a, l + 3))});
    const Elem l2 = sum({F.mul(F.pow(a, l), F.pow(b, l)), F.neg(F.pow(c, l)), F.mul(a, F.mul(b, b)), F.mul(b, c),
                         F.neg(F.pow(a, 2 * l + 3))});
    const Elem l3 = sum({F.mul(a, F.pow(c, l)), F.neg(F.mul(F.pow(a, l + 1), F.pow(b, l))), F.mul(F.pow(a, l + 3), b),
                         F.mul(F.mul(a, a), F.mul(b, b)), F.neg(F.pow(b, l + 1)), F.neg(F.mul(c, c)),
                         F.pow(a, 2 * l + 4)});
    return {l1, l2, l3};
  }

  std::array<Elem, 6> coords6(Point x) const {
    const Vec3 v = coords(x);
    const Vec3 l = lambdas(v[0], v[1], v[2]);
    return {v[0], v[1], v[2], l[0], l[1], l[2]};
  }

 private:
  unsigned m_;
  unsigned ell_ = 0;
  FieldCtx field_;
};

using ActionDomain = std::variant<ProjectiveLine, HermitianDomain, SuzukiDomain, ReeDomain>;

inline std::size_t domain_size(const ActionDomain& d) {
  return std::visit([](const auto& x) { return x.size(); }, d);
}

}  // namespace rankone
