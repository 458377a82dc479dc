#pragma once

// The eight acceptance criteria, each runnable at smoke scale (smallest
// feasible q) or full scale (every listed q) under a wall-clock limit.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rankone/report.hpp"

namespace rankone {

enum class Scale { smoke, full };

inline Scale parse_scale(const std::string& s) {
  if (s == "smoke") return Scale::smoke;
  if (s == "full") return Scale::full;
  throw std::invalid_argument("unknown suite '" + s + "'");
}

struct CriterionResult {
  int id = 0;
  std::string title;
  double limit_ms = 0;
  double elapsed_ms = 0;
  bool skipped = false;
  std::string note;
  std::vector<std::pair<std::string, bool>> checks;
  json details = json::object();

  bool checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
  }
  bool in_time() const { return elapsed_ms < limit_ms; }
  bool pass() const { return !skipped && !checks.empty() && checks_pass() && in_time(); }
  void check(std::string id, bool ok) { checks.emplace_back(std::move(id), ok); }
};

struct SuiteContext {
  Scale scale = Scale::full;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  MemoryPolicy memory{};
};

namespace acceptance {

inline std::string qtag(const char* what, std::uint64_t q) { return std::string(what) + "(q=" + std::to_string(q) + ")"; }

inline std::vector<std::uint32_t> pick(Scale s, std::vector<std::uint32_t> smoke, std::vector<std::uint32_t> full) {
  return s == Scale::smoke ? smoke : full;
}

// 1. d(h, PGU(3,q)) = q^3 - p by the reduced method; brute-force agreement.
inline void unitary_distance(const SuiteContext& ctx, CriterionResult& r) {
  for (std::uint32_t q : pick(ctx.scale, {2, 3}, {2, 3, 4, 5, 8, 9})) {
    HermitianDomain D(q);
    const auto red = distance_reduced(D, field_automorphism_h(D));
    const std::size_t want = std::size_t{q} * q * q - D.p();
    r.details["reduced"][std::to_string(q)] = red.distance;
    r.check(qtag("reduced", q), red.distance == want && red.justified);
  }
  for (std::uint32_t q : pick(ctx.scale, {2}, {2, 3, 4})) {
    BuildOptions bo;
    bo.memory = ctx.memory;
    auto B = build_group(Family::pgu3, q, bo);
    const auto& D = std::get<HermitianDomain>(B.domain);
    const auto d = distance_to_group(field_automorphism_h(D), B.group, DistanceMode::brute, ctx.workers);
    r.details["brute"][std::to_string(q)] = d.distance;
    r.check(qtag("brute", q), d.distance == std::size_t{q} * q * q - D.p());
  }
}

// 2. d(h, Sz(8)) = 60 both ways; d(h, Sz(32)) = 1020 by the reduced method.
inline void suzuki_distance(const SuiteContext& ctx, CriterionResult& r) {
  BuildOptions bo;
  bo.memory = ctx.memory;
  auto B = build_group(Family::sz, 8, bo);
  const auto& D8 = std::get<SuzukiDomain>(B.domain);
  const auto h8 = field_automorphism_h(D8);
  const auto brute = distance_to_group(h8, B.group, DistanceMode::brute, ctx.workers);
  const auto red8 = distance_reduced(D8, h8);
  r.details["sz8"] = {{"brute", brute.distance}, {"reduced", red8.distance}};
  r.check("sz8_brute", brute.distance == 60);
  r.check("sz8_reduced", red8.distance == 60 && red8.justified);
  if (ctx.scale == Scale::full) {
    SuzukiDomain D32(32);
    const auto red32 = distance_reduced(D32, field_automorphism_h(D32));
    r.details["sz32"] = {{"reduced", red32.distance}};
    r.check("sz32_reduced", red32.distance == 1020 && red32.justified);
  }
}

// 3. Ree checks at q = 3 and q = 27.
inline void ree_checks(const SuiteContext& ctx, CriterionResult& r) {
  for (std::uint32_t q : pick(ctx.scale, {3}, {3, 27})) {
    ReeDomain D(q);
    std::size_t mx = 0;
    bool all = true;
    for (Elem k = 1; k < q; ++k) {
      const auto rep = count_eq8(D, k);
      mx = std::max(mx, rep.count);
      all = all && rep.holds;
    }
    r.details["eq8_max"][std::to_string(q)] = mx;
    r.check(qtag("eq8_bounded", q), all && mx <= 27);
    r.check(qtag("eq8_kappa1", q), count_eq8(D, 1).count == 27);
  }
  if (ctx.scale == Scale::full) {
    ReeDomain D(27);
    const auto h = field_automorphism_h(D);
    const auto y1h = torus_element(D, 1) * inverse(h);
    r.details["fix_y1_hinv_27"] = fix_count(y1h);
    r.check("fix_y1_hinv(q=27)", fix_count(y1h) == 28);
    const auto red = distance_reduced(D, h);
    r.check("reduced(q=27)", red.distance == 27u * 27 * 27 - 27);
  }
  ReeDomain D3(3);
  const auto h3 = field_automorphism_h(D3);
  r.check("h_identity(q=3)", h3.is_identity());
  BuildOptions bo;
  bo.memory = ctx.memory;
  auto B = build_group(Family::ree, 3, bo);
  const auto d = distance_to_group(h3, B.group, DistanceMode::brute, ctx.workers);
  const auto red = distance_reduced(D3, h3);
  r.details["ree3"] = {{"brute", d.distance}, {"reduced", red.distance}};
  r.check("distance_zero(q=3)", d.distance == 0 && red.distance == 0);
}

// 4. The unitary system: count <= p - 1 for all (gamma, delta), and
// fix(y h^-1) = 2 + solutions with a != 0.
inline void system_psu(const SuiteContext& ctx, CriterionResult& r) {
  for (std::uint32_t q : pick(ctx.scale, {2, 3}, {2, 3, 4, 5, 7, 8, 9})) {
    HermitianDomain D(q);
    const auto& F = D.field();
    const Permutation hinv = inverse(field_automorphism_h(D));
    bool bounded = true, corr = true;
    std::size_t pairs = 0, mx = 0;
    for (Elem g = 1; g < F.q(); ++g)
      for (Elem d : F.norm_one_elements()) {
        const auto rep = count_eq3(F, g, d);
        bounded = bounded && rep.holds;
        mx = std::max(mx, rep.count);
        corr = corr && fix_count(torus_element(D, g, d) * hinv) == 2 + rep.count_a_nonzero;
        ++pairs;
      }
    r.details[std::to_string(q)] = {{"pairs", pairs}, {"max_count", mx}};
    r.check(qtag("count_bound", q), bounded);
    r.check(qtag("fix_correspondence", q), corr);
  }
}

// 5. The Suzuki system: exactly the four closed-form solutions for all kappa.
inline void system_sz(const SuiteContext& ctx, CriterionResult& r) {
  for (std::uint32_t q : pick(ctx.scale, {8}, {8, 32})) {
    SuzukiDomain D(q);
    const Permutation hinv = inverse(field_automorphism_h(D));
    bool ok = true, corr = true;
    for (Elem k = 1; k < q; ++k) {
      const auto rep = count_eq9(D, k);
      ok = ok && rep.holds;
      corr = corr && fix_count(torus_element(D, k) * hinv) == 1 + rep.count;
    }
    r.check(qtag("four_solutions", q), ok);
    r.check(qtag("fix_correspondence", q), corr);
  }
}

// 6. Exact covering radii by a full sweep of Sym_n.
inline void exact_radii(const SuiteContext& ctx, CriterionResult& r) {
  CoveringOptions co;
  co.workers = ctx.workers;
  for (std::uint32_t q : pick(ctx.scale, {3, 4}, {3, 4, 5, 7, 8})) {
    auto B = build_group(Family::psl2, q);
    const auto cr = covering_radius_exact(B.group, co);
    r.details["psl2"][std::to_string(q)] = cr.radius;
    r.check(qtag("psl2", q), cr.radius == q - std::gcd<std::uint32_t>(2, q));
  }
  Stopwatch sw;
  auto B = build_group(Family::pgu3, 2);
  const auto cr = covering_radius_exact(B.group, co);
  const double ms = sw.ms();
  r.details["pgu3_2"] = {{"radius", cr.radius}, {"witness", to_json(cr.witness)}};
  r.check("pgu3(q=2)", cr.radius == 6);
  r.check("pgu3(q=2)_under_60s", ms < 60000);
}

// 7. Group orders, 2-transitivity and |PGU : PSU|.
inline void group_oracles(const SuiteContext& ctx, CriterionResult& r) {
  BuildOptions bo;
  bo.memory = ctx.memory;
  auto certified = [](const BuiltGroup& B) {
    return !B.group.certificates().empty() &&
           std::all_of(B.group.certificates().begin(), B.group.certificates().end(),
                       [](const auto& c) { return c.holds(); });
  };
  for (std::uint32_t q : pick(ctx.scale, {2, 3}, {2, 3, 4, 5})) {
    auto G = build_group(Family::pgu3, q, bo);
    auto S = build_group(Family::psu3, q, bo);
    r.check(qtag("pgu3_order", q), G.order_verified && G.group.order() == expected_order(Family::pgu3, q));
    r.check(qtag("pgu3_2transitive", q), certified(G) && certified(S));
    r.check(qtag("pgu_psu_index", q), G.group.order() / S.group.order() == std::gcd<std::uint32_t>(3, q + 1) &&
                                          G.group.order() % S.group.order() == 0);
    bool inside = true;
    for (std::size_t i = 0; i < S.group.order(); ++i) inside = inside && G.group.contains(S.group.element(i));
    r.check(qtag("psu_in_pgu", q), inside);
  }
  for (std::uint32_t q : pick(ctx.scale, {8}, {8})) {
    auto G = build_group(Family::sz, q, bo);
    r.check(qtag("sz_order", q), G.order_verified && G.group.order() == std::uint64_t{q * q + 1} * q * q * (q - 1));
    r.check(qtag("sz_2transitive", q), certified(G));
  }
  for (std::uint32_t q : pick(ctx.scale, {2, 3, 4, 5}, {2, 3, 4, 5, 7, 8, 9, 11, 13})) {
    auto G = build_group(Family::pgl2, q, bo);
    r.check(qtag("pgl2_order", q), G.order_verified && G.group.order() == std::uint64_t{q + 1} * q * (q - 1));
    r.check(qtag("pgl2_3transitive", q), certified(G));
  }
  auto R = build_group(Family::ree, 3, bo);
  r.check("ree_order(q=3)", R.order_verified && R.group.order() == 1512);
  r.check("ree_2transitive(q=3)", certified(R));
}

// 8. The tensor geometry suite.
inline void geometry(const SuiteContext& ctx, CriterionResult& r) {
  std::mt19937_64 rng(ctx.seed);
  const bool full = ctx.scale == Scale::full;

  // (a) random graphs are ovoids
  for (std::uint32_t q : {3u, 4u}) {
    ProjectiveLine L(q);
    std::vector<Point> v(L.size());
    std::iota(v.begin(), v.end(), 0);
    bool ok = true;
    const int trials = full ? 1000 : 100;
    for (int t = 0; t < trials; ++t) {
      std::shuffle(v.begin(), v.end(), rng);
      const auto O = graph_of(L, Permutation(v), false);
      ok = ok && O.members.size() == q + 1 && pairwise_non_orthogonal(L.field(), O);
    }
    r.check(qtag("a_random_graph_ovoid", q), ok);
  }

  // (b) every Mobius graph lies in its plane [b,-d,a,-c]
  for (std::uint32_t q : pick(ctx.scale, {2, 3}, {2, 3, 4, 5})) {
    ProjectiveLine L(q);
    bool ok = true;
    for (const auto& m : mobius_parameters(L.field())) {
      const auto O = graph_of(L, L.mobius(m[0], m[1], m[2], m[3]), false);
      const Row plane = conic_plane(L.field(), m);
      for (const auto& X : O.members) ok = ok && dot(L.field(), plane, X.coords) == 0;
    }
    r.check(qtag("b_conic_plane", q), ok);
  }

  // (c) bridge identity |graph(f) cap graph(g)| = fix(f g^-1)
  auto bridge = [](const auto& D, const std::vector<Permutation>& fs, const std::vector<Permutation>& gs) {
    const std::size_t n = D.size();
    std::map<Row, std::size_t> ids;
    std::vector<std::size_t> pid(n * n);
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y) pid[x * n + y] = ids.emplace(segre(D, x, y).coords, ids.size()).first->second;
    const std::size_t words = (n * n + 63) / 64;
    auto bits = [&](const Permutation& p) {
      std::vector<std::uint64_t> b(words, 0);
      for (Point x = 0; x < n; ++x) {
        const std::size_t id = pid[x * n + p[x]];
        b[id >> 6] |= std::uint64_t{1} << (id & 63);
      }
      return b;
    };
    std::vector<std::vector<std::uint64_t>> gb;
    std::vector<Permutation> ginv;
    for (const auto& g : gs) gb.push_back(bits(g)), ginv.push_back(inverse(g));
    for (const auto& f : fs) {
      const auto fb = bits(f);
      for (std::size_t j = 0; j < gs.size(); ++j) {
        std::size_t meet = 0;
        for (std::size_t w = 0; w < words; ++w) meet += std::popcount(fb[w] & gb[j][w]);
        if (meet != fix_count(f * ginv[j])) return false;
      }
    }
    return true;
  };
  auto all_perms = [](std::size_t n) {
    std::vector<Permutation> out;
    std::vector<Point> v(n);
    std::iota(v.begin(), v.end(), 0);
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
  };
  for (std::uint32_t q : {2u, 3u}) {
    ProjectiveLine L(q);
    const auto S = all_perms(L.size());
    r.check(qtag("c_bridge_pg3", q), bridge(L, S, S));
  }
  {
    auto B = build_group(Family::pgu3, 2);
    const auto& D = std::get<HermitianDomain>(B.domain);
    std::vector<Permutation> G;
    for (std::size_t i = 0; i < B.group.order(); ++i) G.push_back(B.group.element(i));
    std::vector<Permutation> fs;
    if (full) {
      fs = all_perms(D.size());
    } else {
      std::vector<Point> v(D.size());
      std::iota(v.begin(), v.end(), 0);
      for (int t = 0; t < 2000; ++t) {
        std::shuffle(v.begin(), v.end(), rng);
        fs.emplace_back(v);
      }
    }
    r.check("c_bridge_pg8(q=2)", bridge(D, fs, G));
  }
  if (full) {
    auto B = build_group(Family::pgu3, 3);
    const auto& D = std::get<HermitianDomain>(B.domain);
    const auto h = field_automorphism_h(D);
    std::vector<Permutation> G, fs;
    for (std::size_t i = 0; i < B.group.order(); ++i) G.push_back(B.group.element(i));
    fs = G;
    for (const auto& g : G) fs.push_back(g * h);
    r.check("c_bridge_pg8(q=3)", bridge(D, fs, G));
  }

  // (d), (e) geometric covering radius against the exhaustive one
  CoveringOptions co;
  co.workers = ctx.workers;
  for (std::uint32_t q : pick(ctx.scale, {3}, {3, 4})) {
    const auto geo = covering_radius_geometric(q, Ambient::pg3, ctx.workers);
    auto B = build_group(Family::pgl2, q);
    const auto ex = covering_radius_exact(B.group, co);
    r.details["d_pg3"][std::to_string(q)] = {{"geometric", geo.radius}, {"exact", ex.radius}, {"max_min", geo.max_min}};
    r.check(qtag("d_geometric_pg3", q), geo.radius == ex.radius);
  }
  const auto g8 = covering_radius_geometric(2, Ambient::pg8, ctx.workers);
  r.details["e_pg8"] = {{"geometric", g8.radius}, {"max_min", g8.max_min}, {"min_max", g8.min_max}};
  r.check("e_geometric_pg8(q=2)", g8.radius == 6);

  // (f) span 5, perp plane missing the Segre variety, isotropy by parity
  for (std::uint32_t q : pick(ctx.scale, {2}, {2, 3})) {
    auto B = build_group(Family::pgu3, q);
    const auto& D = std::get<HermitianDomain>(B.domain);
    const auto id = span_and_perp(D, graph_of(D, Permutation::identity(D.size())), &B.group);
    bool ok = id.span_dim == 5 && id.perp_dim == 2 && id.perp_segre_points == 0 && id.equals_alternating.value_or(false);
    ok = ok && (q % 2 == 0 ? id.totally_isotropic : id.nondegenerate);
    std::uniform_int_distribution<std::size_t> pickg(0, B.group.order() - 1);
    const int trials = full ? 20 : 5;
    for (int t = 0; t < trials; ++t) {
      const auto s = span_and_perp(D, graph_of(D, B.group.element(pickg(rng)), false), &B.group);
      ok = ok && s.span_dim == 5 && s.perp_dim == 2 && s.perp_segre_points == 0 &&
           (q % 2 == 0 ? s.totally_isotropic : s.nondegenerate);
    }
    r.check(qtag("f_span_perp", q), ok);
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_ms;
  std::function<void(const SuiteContext&, CriterionResult&)> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "d(h,PGU(3,q)) = q^3-p, reduced and brute force", 120000, unitary_distance},
      {2, "d(h,Sz(q)) = q^2-4 at q=8 (both) and q=32 (reduced)", 60000, suzuki_distance},
      {3, "Ree checks at q=3 and q=27", 60000, ree_checks},
      {4, "unitary fixed-point system, exhaustive", 120000, system_psu},
      {5, "Suzuki fixed-point system, exhaustive", 60000, system_sz},
      {6, "exact covering radii by full sweep", 60000, exact_radii},
      {7, "group construction oracles", 120000, group_oracles},
      {8, "tensor geometry suite", 300000, geometry},
  };
  return all;
}

}  // namespace acceptance

inline CriterionResult run_criterion(const acceptance::Criterion& c, const SuiteContext& ctx) {
  CriterionResult r;
  r.id = c.id;
  r.title = c.title;
  r.limit_ms = c.limit_ms;
  Stopwatch sw;
  try {
    c.run(ctx, r);
  } catch (const InfeasibleError& e) {
    r.skipped = true;
    r.note = e.what();
  } catch (const std::exception& e) {
    r.check(std::string("exception: ") + e.what(), false);
  }
  r.elapsed_ms = sw.ms();
  return r;
}

inline std::vector<CriterionResult> run_suite(const SuiteContext& ctx,
                                              const std::function<void(const CriterionResult&)>& progress = {}) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance::criteria()) {
    out.push_back(run_criterion(c, ctx));
    if (progress) progress(out.back());
  }
  return out;
}

inline std::string summary_line(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion " << r.id << ": " << (r.skipped ? "SKIP" : r.pass() ? "PASS" : "FAIL") << "  " << r.title << "  ("
     << static_cast<long long>(r.elapsed_ms) << " ms, limit " << static_cast<long long>(r.limit_ms) << " ms)";
  if (r.skipped) os << "  " << r.note;
  for (const auto& [id, ok] : r.checks)
    if (!ok) os << "\n    failed: " << id;
  if (!r.skipped && !r.in_time()) os << "\n    failed: time limit";
  return os.str();
}

}  // namespace rankone
