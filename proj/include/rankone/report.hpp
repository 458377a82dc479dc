#pragma once

// JSON and CSV serialization of results. Reports carry a schema version, the
// config echo (including the seed), a results payload, a per-check ledger and
// elapsed_ms.

#include <chrono>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankone/lemmas.hpp"
#include "rankone/tensor.hpp"

namespace rankone {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

inline json to_json(const Permutation& g) { return json(g.images()); }

inline json field_descriptor(const FieldCtx& F) {
  return {{"p", F.p()}, {"f", F.f()}, {"modulus", F.modulus()}};
}

inline json field_descriptor(const ActionDomain& dom) {
  return std::visit(
      [](const auto& D) -> json {
        using T = std::decay_t<decltype(D)>;
        if constexpr (std::is_same_v<T, HermitianDomain>) {
          json j = field_descriptor(D.field().base());
          j["extension"] = field_descriptor(D.field());
          return j;
        } else {
          return field_descriptor(D.field());
        }
      },
      dom);
}

inline json to_json(const SolutionCountReport& r) {
  json j{{"system", to_string(r.system)}, {"q", r.q}, {"params", r.params}, {"count", r.count}};
  if (r.system == SystemId::eq3) j["count_a_nonzero"] = r.count_a_nonzero;
  j["bound"] = r.bound;
  if (r.count <= SolutionCountReport::kMaxListed) j["solutions"] = r.solutions;
  j["holds"] = r.holds;
  return j;
}

inline json to_json(const ReducedDistance& r) {
  return {{"distance", r.distance},
          {"max_fix", r.max_fix},
          {"coset_size", r.coset_size},
          {"witness_params", r.witness_params},
          {"witness", to_json(r.witness)},
          {"justification",
           {{"distinguished_pair_fixed", r.pair_fixed}, {"max_fix_at_least_2", r.max_fix >= 2}, {"holds", r.justified}}}};
}

inline json checks_json(const std::vector<std::pair<std::string, bool>>& checks) {
  json a = json::array();
  for (const auto& [id, pass] : checks) a.push_back({{"id", id}, {"pass", pass}});
  return a;
}

inline json to_json(const TheoremReport& r) {
  json j{{"family", to_string(r.family)},
         {"q", r.q},
         {"degree", r.degree},
         {"lower", r.lower},
         {"upper", r.upper},
         {"claimed_value", {{"lower", r.claimed_lower}, {"upper", r.upper}}},
         {"computed_value", r.lower},
         {"method", r.method},
         {"agreement", r.family == Family::psu3 ? r.lower >= r.claimed_lower : r.lower == r.claimed_lower},
         {"upper_source", r.upper_source}};
  if (r.brute_distance) j["brute_distance"] = *r.brute_distance;
  if (r.cr_exact) {
    j["cr_exact"] = *r.cr_exact;
    j["cr_witness"] = to_json(*r.cr_witness);
  }
  j["h"] = to_json(r.h);
  j["witness"] = to_json(r.witness);
  j["witness_params"] = r.witness_params;
  j["justified"] = r.justified;
  j["fell_back_to_brute"] = r.fell_back;
  return j;
}

inline json to_json(const GeometricCoveringRadius& g) {
  return {{"ambient", to_string(g.ambient)}, {"q", g.q},           {"covering_radius", g.radius},
          {"min_max", g.min_max},           {"max_min", g.max_min}, {"ovoids", g.ovoids},
          {"classical_ovoids", g.classical}, {"witness", to_json(g.witness)}};
}

inline json group_dump(const BuiltGroup& B) {
  json gens = json::array();
  for (const auto& g : B.group.generators()) gens.push_back(to_json(g));
  json certs = json::array();
  for (const auto& c : B.group.certificates())
    certs.push_back({{"t", c.t}, {"orbit_size", c.orbit_size}, {"expected", c.expected}, {"holds", c.holds()}});
  return {{"family", to_string(B.family)},
          {"q", B.q},
          {"degree", B.group.degree()},
          {"field", field_descriptor(B.domain)},
          {"generators", gens},
          {"order", B.group.order()},
          {"expected_order", B.expected_order},
          {"order_verified", B.order_verified},
          {"materialized", B.group.materialized()},
          {"transitivity", certs}};
}

// ---- CSV ---------------------------------------------------------------------

/// One point per row: index, then coordinates (field element indices).
inline void write_domain_csv(std::ostream& os, const ActionDomain& dom) {
  std::visit(
      [&](const auto& D) {
        using T = std::decay_t<decltype(D)>;
        if constexpr (std::is_same_v<T, ProjectiveLine>) {
          os << "index,x1,x2\n";
          for (Point i = 0; i < D.size(); ++i) os << i << ',' << D.coords(i)[0] << ',' << D.coords(i)[1] << '\n';
        } else if constexpr (std::is_same_v<T, HermitianDomain>) {
          os << "index,x1,x2,x3\n";
          for (Point i = 0; i < D.size(); ++i) {
            const auto& c = D.coords(i);
            os << i << ',' << c[0] << ',' << c[1] << ',' << c[2] << '\n';
          }
        } else {
          os << "index,a,b,c\n";
          os << "0,inf,inf,inf\n";
          for (Point i = 1; i < D.size(); ++i) {
            const auto c = D.coords(i);
            os << i << ',' << c[0] << ',' << c[1] << ',' << c[2] << '\n';
          }
        }
      },
      dom);
}

inline void write_ovoid_csv(std::ostream& os, const Ovoid& O) {
  const std::size_t k = ambient_dim(O.ambient);
  os << "index";
  for (std::size_t i = 0; i < k; ++i) os << ",X" << i + 1;
  os << '\n';
  for (std::size_t i = 0; i < O.members.size(); ++i) {
    os << i;
    for (Elem x : O.members[i].coords) os << ',' << x;
    os << '\n';
  }
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace rankone
