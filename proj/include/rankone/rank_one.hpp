#pragma once

// Named permutations and generated groups for PGL(2,q), PSL(2,q), PGU(3,q),
// PSU(3,q), Sz(q) and Ree(q) on their action domains.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rankone/domains.hpp"
#include "rankone/group.hpp"

namespace rankone {

enum class Family { pgl2, psl2, pgu3, psu3, sz, ree };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::pgl2: return "pgl2";
    case Family::psl2: return "psl2";
    case Family::pgu3: return "pgu3";
    case Family::psu3: return "psu3";
    case Family::sz: return "sz";
    case Family::ree: return "ree";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  for (Family f : {Family::pgl2, Family::psl2, Family::pgu3, Family::psu3, Family::sz, Family::ree})
    if (to_string(f) == s) return f;
  throw DomainError("unknown family '" + s + "'");
}

inline std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

/// Order of the group from its standard formula.
inline std::uint64_t expected_order(Family fam, std::uint64_t q) {
  switch (fam) {
    case Family::pgl2: return (q + 1) * q * (q - 1);
    case Family::psl2: return (q + 1) * q * (q - 1) / gcd_u(2, q - 1);
    case Family::pgu3: return (q * q * q + 1) * q * q * q * (q * q - 1);
    case Family::psu3: return (q * q * q + 1) * q * q * q * (q * q - 1) / gcd_u(3, q + 1);
    case Family::sz: return (q * q + 1) * q * q * (q - 1);
    case Family::ree: return (q * q * q + 1) * q * q * q * (q - 1);
  }
  return 0;
}

inline std::size_t expected_degree(Family fam, std::uint64_t q) {
  switch (fam) {
    case Family::pgl2:
    case Family::psl2: return q + 1;
    case Family::pgu3:
    case Family::psu3:
    case Family::ree: return q * q * q + 1;
    case Family::sz: return q * q + 1;
  }
  return 0;
}

/// The optional modulus defines GF(q); the Hermitian domain extends it to GF(q^2).
inline ActionDomain build_domain(Family fam, std::uint32_t q, std::optional<std::vector<unsigned>> modulus = std::nullopt) {
  switch (fam) {
    case Family::pgl2:
    case Family::psl2: return ProjectiveLine(q, std::move(modulus));
    case Family::pgu3:
    case Family::psu3: return HermitianDomain(q, std::move(modulus));
    case Family::sz: return SuzukiDomain(q, std::move(modulus));
    case Family::ree: return ReeDomain(q, std::move(modulus));
  }
  throw DomainError("unknown family");
}

// ---- field automorphism h --------------------------------------------------

/// <(x1,x2,x3)> -> <(x1^p, x2^p, x3^p)>.
inline Permutation field_automorphism_h(const HermitianDomain& D) {
  std::vector<Point> im(D.size());
  for (Point i = 0; i < D.size(); ++i) {
    const Vec3& v = D.coords(i);
    im[i] = D.index_of({D.field().frobenius(v[0]), D.field().frobenius(v[1]), D.field().frobenius(v[2])});
  }
  return Permutation(std::move(im));
}

/// (a,b,c) -> (a^2, b^2, c^2), infinity fixed.
inline Permutation field_automorphism_h(const SuzukiDomain& D) {
  const auto& F = D.field();
  std::vector<Point> im(D.size());
  im[SuzukiDomain::kInfinity] = SuzukiDomain::kInfinity;
  for (Point i = 1; i < D.size(); ++i) {
    const Vec3 v = D.coords(i);
    const Point j = D.index_of(F.frobenius(v[0]), F.frobenius(v[1]));
    if (D.coords(j)[2] != F.frobenius(v[2])) throw DomainError("h does not preserve the ovoid");
    im[i] = j;
  }
  return Permutation(std::move(im));
}

/// (a,b,c,...) -> (a^3, b^3, c^3, ...), infinity fixed.
inline Permutation field_automorphism_h(const ReeDomain& D) {
  const auto& F = D.field();
  std::vector<Point> im(D.size());
  im[0] = 0;
  for (Point i = 1; i < D.size(); ++i) {
    const Vec3 v = D.coords(i);
    im[i] = D.index_of(F.frobenius(v[0]), F.frobenius(v[1]), F.frobenius(v[2]));
  }
  return Permutation(std::move(im));
}

// ---- torus -----------------------------------------------------------------

inline Mat3 hermitian_torus_matrix(const HermitianDomain& D, Elem gamma, Elem delta) {
  const auto& F = D.field();
  if (gamma == 0) throw DomainError("gamma must be nonzero");
  if (F.norm(delta) != 1) throw DomainError("delta must satisfy delta^(q+1) = 1");
  return Mat3{Vec3{F.norm(gamma), 0, 0}, Vec3{0, F.mul(F.conj(gamma), delta), 0}, Vec3{0, 0, 1}};
}

/// diag(gamma^(q+1), gamma^q delta, 1) acting on the Hermitian curve.
inline Permutation torus_element(const HermitianDomain& D, Elem gamma, Elem delta) {
  return D.permutation_of(hermitian_torus_matrix(D, gamma, delta));
}

/// y_kappa: (a,b,c) -> (kappa a, kappa^(l+1) b, kappa^(l+2) c).
inline Permutation torus_element(const SuzukiDomain& D, Elem kappa) {
  const auto& F = D.field();
  if (kappa == 0) throw DomainError("kappa must be nonzero");
  const Elem kb = F.pow(kappa, D.ell() + 1), kc = F.pow(kappa, D.ell() + 2);
  std::vector<Point> im(D.size());
  for (Point i = 1; i < D.size(); ++i) {
    const Vec3 v = D.coords(i);
    const Point j = D.index_of(F.mul(kappa, v[0]), F.mul(kb, v[1]));
    if (D.coords(j)[2] != F.mul(kc, v[2])) throw DomainError("y_kappa does not preserve the ovoid");
    im[i] = j;
  }
  return Permutation(std::move(im));
}

inline Permutation torus_element(const ReeDomain& D, Elem kappa) {
  const auto& F = D.field();
  if (kappa == 0) throw DomainError("kappa must be nonzero");
  const Elem kb = F.pow(kappa, D.ell() + 1), kc = F.pow(kappa, D.ell() + 2);
  std::vector<Point> im(D.size());
  for (Point i = 1; i < D.size(); ++i) {
    const Vec3 v = D.coords(i);
    im[i] = D.index_of(F.mul(kappa, v[0]), F.mul(kb, v[1]), F.mul(kc, v[2]));
  }
  return Permutation(std::move(im));
}

// ---- generators ------------------------------------------------------------

/// [[1,0,0],[beta,1,0],[alpha,-beta^q,1]] with alpha + alpha^q + beta^(q+1) = 0.
inline Mat3 hermitian_unipotent_matrix(const HermitianDomain& D, Elem alpha, Elem beta) {
  const auto& F = D.field();
  if (F.add(F.trace(alpha), F.norm(beta)) != 0) throw DomainError("(alpha, beta) violates the isotropy identity");
  return Mat3{Vec3{1, 0, 0}, Vec3{beta, 1, 0}, Vec3{alpha, F.neg(F.conj(beta)), 1}};
}

inline Mat3 hermitian_weyl_matrix(const HermitianDomain& D) {
  return Mat3{Vec3{0, 0, 1}, Vec3{0, D.field().neg(1), 0}, Vec3{1, 0, 0}};
}

/// Unipotent matrices whose beta parts form a GF(p)-basis of GF(q^2) and
/// whose central parts span the trace-zero subspace, plus the Weyl element;
/// with `full`, also two torus generators.
inline std::vector<Mat3> unitary_generator_matrices(const HermitianDomain& D, bool full) {
  const auto& F = D.field();
  std::vector<Mat3> mats;
  auto alpha_for = [&](Elem beta) {
    const Elem target = F.neg(F.norm(beta));
    for (Elem a = 0; a < F.q(); ++a)
      if (F.trace(a) == target) return a;
    throw DomainError("no alpha for beta");
  };
  const Elem w = F.primitive_element();
  Elem beta = 1;
  for (unsigned i = 0; i < F.f(); ++i) {
    mats.push_back(hermitian_unipotent_matrix(D, alpha_for(beta), beta));
    beta = F.mul(beta, w);
  }
  // trace-zero central elements, kept when they enlarge the GF(p)-span
  std::vector<Elem> span{0};
  for (Elem a = 1; a < F.q() && span.size() < D.q(); ++a) {
    if (F.trace(a) != 0 || std::find(span.begin(), span.end(), a) != span.end()) continue;
    mats.push_back(hermitian_unipotent_matrix(D, a, 0));
    std::vector<Elem> grown;
    for (Elem s : span)
      for (unsigned k = 0; k < F.p(); ++k) grown.push_back(F.add(s, F.mul(F.from_int(k), a)));
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    span = std::move(grown);
  }
  mats.push_back(hermitian_weyl_matrix(D));
  if (full) {
    const auto norm_one = F.norm_one_elements();
    Elem delta_gen = 1;
    for (Elem d : norm_one)
      if (F.multiplicative_order(d) == D.q() + 1) {
        delta_gen = d;
        break;
      }
    mats.push_back(hermitian_torus_matrix(D, w, 1));
    mats.push_back(hermitian_torus_matrix(D, 1, delta_gen));
  }
  for (const auto& M : mats)
    if (!D.preserves_form(M)) throw DomainError("generator does not preserve the Hermitian form");
  return mats;
}

/// (a, b) -> (a + alpha, b + beta + a alpha^l), infinity fixed.
inline Permutation suzuki_unipotent(const SuzukiDomain& D, Elem alpha, Elem beta) {
  const auto& F = D.field();
  const Elem al = F.pow(alpha, D.ell());
  std::vector<Point> im(D.size());
  for (Point i = 1; i < D.size(); ++i) {
    const Vec3 v = D.coords(i);
    im[i] = D.index_of(F.add(v[0], alpha), F.add(F.add(v[1], beta), F.mul(v[0], al)));
  }
  return Permutation(std::move(im));
}

/// Reversal of the embedding (a,b,c) -> (1 : b : a : c), infinity -> (0:0:0:1):
/// (a,b) -> (b/c, a/c), infinity <-> origin. Checks c' = 1/c on every point.
inline Permutation suzuki_involution(const SuzukiDomain& D) {
  const auto& F = D.field();
  std::vector<Point> im(D.size());
  im[SuzukiDomain::kInfinity] = SuzukiDomain::kOrigin;
  im[SuzukiDomain::kOrigin] = SuzukiDomain::kInfinity;
  for (Point i = 2; i < D.size(); ++i) {
    const Vec3 v = D.coords(i);
    if (v[2] == 0) throw DomainError("ovoid point with c = 0 off the origin");
    const Elem ci = F.inv(v[2]);
    const Point j = D.index_of(F.mul(v[1], ci), F.mul(v[0], ci));
    if (D.coords(j)[2] != ci) throw DomainError("involution leaves the ovoid");
    im[i] = j;
  }
  return Permutation(std::move(im));
}

inline std::vector<Permutation> suzuki_generators(const SuzukiDomain& D) {
  std::vector<Permutation> gens;
  Elem x = 1;
  const Elem w = D.field().primitive_element();
  for (unsigned i = 0; i < D.field().f(); ++i) {
    gens.push_back(suzuki_unipotent(D, x, 0));
    gens.push_back(suzuki_unipotent(D, 0, x));
    x = D.field().mul(x, w);
  }
  gens.push_back(suzuki_involution(D));
  gens.push_back(torus_element(D, w));
  return gens;
}

/// Right multiplication by (alpha, beta, gamma) in the unipotent group:
/// (a,b,c) -> (a+alpha, b+beta+a alpha^l, c+gamma-alpha b+a beta-a alpha^(l+1)).
inline Permutation ree_unipotent(const ReeDomain& D, Elem alpha, Elem beta, Elem gamma) {
  const auto& F = D.field();
  const Elem al = F.pow(alpha, D.ell()), al1 = F.pow(alpha, D.ell() + 1);
  std::vector<Point> im(D.size());
  for (Point i = 1; i < D.size(); ++i) {
    const auto [a, b, c] = D.coords(i);
    const Elem a2 = F.add(a, alpha);
    const Elem b2 = F.add(F.add(b, beta), F.mul(a, al));
    Elem c2 = F.add(c, gamma);
    c2 = F.sub(c2, F.mul(alpha, b));
    c2 = F.add(c2, F.mul(a, beta));
    c2 = F.sub(c2, F.mul(a, al1));
    im[i] = D.index_of(a2, b2, c2);
  }
  return Permutation(std::move(im));
}

/// Reversal of the embedding (1, a, b, c, l1, l2, l3):
/// (a,b,c) -> (l2/l3, l1/l3, c/l3), infinity <-> origin.
inline Permutation ree_involution(const ReeDomain& D) {
  const auto& F = D.field();
  std::vector<Point> im(D.size());
  im[ReeDomain::kInfinity] = ReeDomain::kOrigin;
  im[ReeDomain::kOrigin] = ReeDomain::kInfinity;
  for (Point i = 2; i < D.size(); ++i) {
    const auto [a, b, c] = D.coords(i);
    const Vec3 l = D.lambdas(a, b, c);
    if (l[2] == 0) throw DomainError("l3 vanishes off the origin");
    const Elem w = F.inv(l[2]);
    im[i] = D.index_of(F.mul(l[1], w), F.mul(l[0], w), F.mul(c, w));
  }
  return Permutation(std::move(im));
}

inline std::vector<Permutation> ree_generators(const ReeDomain& D) {
  std::vector<Permutation> gens;
  Elem x = 1;
  const Elem w = D.field().primitive_element();
  for (unsigned i = 0; i < D.field().f(); ++i) {
    gens.push_back(ree_unipotent(D, x, 0, 0));
    gens.push_back(ree_unipotent(D, 0, x, 0));
    gens.push_back(ree_unipotent(D, 0, 0, x));
    x = D.field().mul(x, w);
  }
  gens.push_back(ree_involution(D));
  gens.push_back(torus_element(D, w));
  return gens;
}

inline std::vector<Permutation> mobius_generators(const ProjectiveLine& L, bool special) {
  const auto& F = L.field();
  const Elem w = F.primitive_element();
  std::vector<Permutation> gens;
  gens.push_back(L.mobius(1, 1, 0, 1));                      // t + 1
  gens.push_back(L.mobius(special ? F.mul(w, w) : w, 0, 0, 1));  // scaling
  gens.push_back(L.mobius(0, F.neg(1), 1, 0));               // -1/t
  return gens;
}

// ---- groups ----------------------------------------------------------------

struct BuildOptions {
  bool materialize = true;
  MemoryPolicy memory;
  std::optional<std::vector<Permutation>> generators;  // overrides built-in generators
  std::optional<std::vector<unsigned>> modulus;
};

struct BuiltGroup {
  Family family;
  std::uint32_t q;
  ActionDomain domain;
  GroupHandle group;
  std::uint64_t expected_order;
  bool order_verified = false;
};

inline std::vector<Permutation> default_generators(Family fam, const ActionDomain& dom) {
  switch (fam) {
    case Family::pgl2:
    case Family::psl2: return mobius_generators(std::get<ProjectiveLine>(dom), fam == Family::psl2);
    case Family::pgu3:
    case Family::psu3: {
      const auto& D = std::get<HermitianDomain>(dom);
      std::vector<Permutation> gens;
      for (const auto& M : unitary_generator_matrices(D, fam == Family::pgu3)) gens.push_back(D.permutation_of(M));
      return gens;
    }
    case Family::sz: return suzuki_generators(std::get<SuzukiDomain>(dom));
    case Family::ree: return ree_generators(std::get<ReeDomain>(dom));
  }
  return {};
}

/// Builds the group on its domain; when materialized, the closure order must
/// equal the formula and the group must pass its transitivity certificate
/// (3 for PGL(2,q), 2 otherwise).
inline BuiltGroup build_group(Family fam, std::uint32_t q, const BuildOptions& opt = {}) {
  ActionDomain dom = build_domain(fam, q, opt.modulus);
  const std::size_t n = domain_size(dom);
  const std::uint64_t expected = expected_order(fam, q);
  std::vector<Permutation> gens = opt.generators ? *opt.generators : default_generators(fam, dom);
  for (const auto& g : gens)
    if (g.degree() != n) throw GroupError("generator degree does not match the domain");
  GroupLabels labels{to_string(fam), q, (fam == Family::psl2 || fam == Family::psu3) ? "special" : "full"};

  GroupHandle G;
  bool verified = false;
  if (opt.materialize) {
    if (!opt.memory.allows(expected, n))
      throw InfeasibleError(to_string(fam) + "(q=" + std::to_string(q) + ") has " + std::to_string(expected) +
                            " elements of degree " + std::to_string(n) + "; exceeds the materialization policy");
    G = closure_generate(std::move(gens), expected, std::move(labels));
    if (G.order() != expected)
      throw GroupError("closure order " + std::to_string(G.order()) + " differs from expected " +
                       std::to_string(expected));
    verified = true;
  } else {
    G = GroupHandle(n, std::move(gens), expected, std::move(labels));
  }
  const unsigned t = fam == Family::pgl2 ? 3 : 2;
  if (std::uint64_t{n} * n <= (std::uint64_t{1} << 22)) {
    auto cert = transitivity_certificate(G.generators(), n, std::min<unsigned>(t, static_cast<unsigned>(n)));
    if (!cert.holds()) throw GroupError("group is not " + std::to_string(t) + "-transitive");
    G.add_certificate(cert);
  }
  return {fam, q, std::move(dom), std::move(G), expected, verified};
}

// ---- two-point stabilizer coset -----------------------------------------------

struct CosetElement {
  Permutation element;        // y h^-1
  std::vector<Elem> params;   // (gamma, delta) or (kappa)
};

/// {y h^-1 : y in Y}, one entry per distinct element, first parameters kept.
inline std::vector<CosetElement> two_point_stabilizer_coset(const HermitianDomain& D, const Permutation& h) {
  const auto& F = D.field();
  const Permutation hinv = inverse(h);
  std::vector<CosetElement> out;
  std::set<Permutation> seen;
  const auto norm_one = F.norm_one_elements();
  for (Elem g = 1; g < F.q(); ++g) {
    for (Elem d : norm_one) {
      Permutation y = torus_element(D, g, d);
      if (!seen.insert(y).second) continue;
      out.push_back({y * hinv, {g, d}});
    }
  }
  return out;
}

template <typename Dom>
  requires std::same_as<Dom, SuzukiDomain> || std::same_as<Dom, ReeDomain>
std::vector<CosetElement> two_point_stabilizer_coset(const Dom& D, const Permutation& h) {
  const Permutation hinv = inverse(h);
  std::vector<CosetElement> out;
  for (Elem k = 1; k < D.q(); ++k) out.push_back({torus_element(D, k) * hinv, {k}});
  return out;
}

}  // namespace rankone
