#pragma once

// Permutation groups given by generators: closure enumeration, membership,
// transitivity certificates, and distance from a permutation to a group.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rankone/parallel.hpp"
#include "rankone/permutation.hpp"

namespace rankone {

/// Closure ran past its cap or produced an unexpected order.
class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested computation is outside the memory/size policy.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::uint16_t;

struct MemoryPolicy {
  std::uint64_t max_elements = 20'000'000;
  std::uint64_t max_bytes = std::uint64_t{2} << 30;

  bool allows(std::uint64_t order, std::size_t degree) const {
    return order <= max_elements && order * degree * sizeof(Cell) <= max_bytes;
  }
};

struct GroupLabels {
  std::string family;
  std::uint32_t q = 0;
  std::string variant;
};

struct TransitivityCertificate {
  unsigned t = 0;
  std::uint64_t orbit_size = 0;
  std::uint64_t expected = 0;
  bool holds() const { return orbit_size == expected; }
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

inline std::uint64_t hash_row(std::span<const Cell> row, std::uint64_t seed = 0x9e3779b97f4a7c15ULL) {
  std::uint64_t h = seed;
  for (Cell c : row) h = mix64(h ^ (c + 0x100000001b3ULL * h));
  return mix64(h ^ row.size());
}

inline bool row_less(std::span<const Cell> a, std::span<const Cell> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Open-addressing set of row indices into a flat image buffer.
class RowTable {
 public:
  RowTable(const std::vector<Cell>& flat, std::size_t degree) : flat_(flat), degree_(degree) { rehash(1024); }

  /// Looks up row `idx`; inserts it if absent. Returns true on insertion.
  bool insert(std::uint32_t idx) {
    if ((size_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
    const std::uint64_t h = hash_row(row(idx));
    std::size_t pos = h & (slots_.size() - 1);
    while (slots_[pos] != 0) {
      const std::uint32_t other = slots_[pos] - 1;
      if (hashes_[other] == h && std::equal(row(other).begin(), row(other).end(), row(idx).begin())) return false;
      pos = (pos + 1) & (slots_.size() - 1);
    }
    if (hashes_.size() <= idx) hashes_.resize(idx + 1);
    hashes_[idx] = h;
    slots_[pos] = idx + 1;
    ++size_;
    return true;
  }

 private:
  std::span<const Cell> row(std::uint32_t idx) const {
    return {flat_.data() + std::size_t{idx} * degree_, degree_};
  }

  void rehash(std::size_t cap) {
    std::vector<std::uint32_t> old = std::move(slots_);
    slots_.assign(cap, 0);
    for (std::uint32_t s : old) {
      if (!s) continue;
      std::size_t pos = hashes_[s - 1] & (cap - 1);
      while (slots_[pos] != 0) pos = (pos + 1) & (cap - 1);
      slots_[pos] = s;
    }
  }

  const std::vector<Cell>& flat_;
  std::size_t degree_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint64_t> hashes_;
  std::size_t size_ = 0;
};

inline void check_generators(std::span<const Permutation> gens, std::size_t degree) {
  if (degree > std::size_t{1} << 16) throw GroupError("degree too large for packed storage");
  for (const auto& g : gens)
    if (g.degree() != degree) throw PermutationError("generators act on different domains");
}

}  // namespace detail

class GroupHandle {
 public:
  GroupHandle() = default;

  /// Unmaterialized handle: generators and a claimed order only.
  GroupHandle(std::size_t degree, std::vector<Permutation> generators, std::uint64_t order, GroupLabels labels = {})
      : degree_(degree), generators_(std::move(generators)), order_(order), labels_(std::move(labels)) {
    detail::check_generators(generators_, degree_);
  }

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  bool materialized() const { return !flat_.empty(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const GroupLabels& labels() const { return labels_; }
  GroupLabels& labels() { return labels_; }
  const std::vector<TransitivityCertificate>& certificates() const { return certificates_; }
  void add_certificate(TransitivityCertificate c) { certificates_.push_back(c); }

  std::span<const Cell> row(std::size_t i) const { return {flat_.data() + i * degree_, degree_}; }
  Permutation element(std::size_t i) const { return Permutation::from_trusted(row(i)); }
  const std::vector<Cell>& flat() const { return flat_; }

  bool contains(const Permutation& g) const {
    require_materialized();
    if (g.degree() != degree_) return false;
    std::vector<Cell> key(g.images().begin(), g.images().end());
    std::size_t lo = 0, hi = order_;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (detail::row_less(row(mid), key))
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo < order_ && std::equal(key.begin(), key.end(), row(lo).begin());
  }

  void require_materialized() const {
    if (!materialized()) throw InfeasibleError("group elements are not materialized");
  }

 private:
  friend GroupHandle closure_generate(std::vector<Permutation>, std::uint64_t, GroupLabels);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::uint64_t order_ = 0;
  GroupLabels labels_;
  std::vector<TransitivityCertificate> certificates_;
  std::vector<Cell> flat_;
};

/// Breadth-first closure of the generators under right multiplication,
/// deduplicated by image array. Elements end up sorted lexicographically.
inline GroupHandle closure_generate(std::vector<Permutation> generators, std::uint64_t order_cap,
                                    GroupLabels labels = {}) {
  if (generators.empty()) throw GroupError("no generators");
  const std::size_t n = generators.front().degree();
  detail::check_generators(generators, n);

  std::vector<Cell> flat;
  flat.reserve(std::min<std::uint64_t>(order_cap, 1u << 20) * n);
  for (std::size_t i = 0; i < n; ++i) flat.push_back(static_cast<Cell>(i));
  detail::RowTable table(flat, n);
  table.insert(0);

  std::vector<std::vector<Cell>> gens;
  for (const auto& g : generators) gens.emplace_back(g.images().begin(), g.images().end());

  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    for (const auto& s : gens) {
      const std::size_t base = flat.size();
      flat.resize(base + n);
      const Cell* src = flat.data() + i * n;
      Cell* dst = flat.data() + base;
      for (std::size_t k = 0; k < n; ++k) dst[k] = s[src[k]];
      if (table.insert(static_cast<std::uint32_t>(count))) {
        if (++count > order_cap)
          throw GroupError("closure exceeded order cap " + std::to_string(order_cap));
      } else {
        flat.resize(base);
      }
    }
  }

  std::vector<std::uint32_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0u);
  auto row_of = [&](std::uint32_t r) { return std::span<const Cell>(flat.data() + std::size_t{r} * n, n); };
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) { return detail::row_less(row_of(a), row_of(b)); });
  std::vector<Cell> sorted(flat.size());
  for (std::size_t r = 0; r < count; ++r) std::copy_n(flat.data() + std::size_t{idx[r]} * n, n, sorted.data() + r * n);

  GroupHandle g(n, std::move(generators), count, std::move(labels));
  g.flat_ = std::move(sorted);
  return g;
}

/// Enumerates the closure without keeping image arrays: only two independent
/// 64-bit fingerprints per element are retained. Calls visit(row) once per
/// element and returns the element count.
template <typename Visit>
std::uint64_t stream_closure(std::span<const Permutation> generators, std::uint64_t order_cap, Visit&& visit) {
  if (generators.empty()) throw GroupError("no generators");
  const std::size_t n = generators.front().degree();
  detail::check_generators(generators, n);
  struct FpHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const { return p.first; }
  };
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, FpHash> seen;
  auto fingerprint = [](std::span<const Cell> r) {
    return std::make_pair(detail::hash_row(r), detail::hash_row(r, 0x2545f4914f6cdd1dULL));
  };
  std::vector<std::vector<Cell>> gens;
  for (const auto& g : generators) gens.emplace_back(g.images().begin(), g.images().end());

  std::vector<Cell> frontier(n);
  std::iota(frontier.begin(), frontier.end(), Cell{0});
  seen.insert(fingerprint(frontier));
  visit(std::span<const Cell>(frontier));
  std::uint64_t count = 1;
  std::vector<Cell> next, cand(n);
  while (!frontier.empty()) {
    next.clear();
    for (std::size_t off = 0; off < frontier.size(); off += n) {
      for (const auto& s : gens) {
        for (std::size_t k = 0; k < n; ++k) cand[k] = s[frontier[off + k]];
        if (!seen.insert(fingerprint(cand)).second) continue;
        if (++count > order_cap) throw GroupError("closure exceeded order cap " + std::to_string(order_cap));
        visit(std::span<const Cell>(cand));
        next.insert(next.end(), cand.begin(), cand.end());
      }
    }
    frontier.swap(next);
  }
  return count;
}

/// Orbit of the ordered tuple (0, 1, ..., t-1) under the generators; the
/// group is t-transitive iff the orbit has n(n-1)...(n-t+1) elements.
inline TransitivityCertificate transitivity_certificate(std::span<const Permutation> generators, std::size_t n,
                                                        unsigned t) {
  if (t == 0 || t > n || t > 4) throw GroupError("unsupported transitivity degree");
  TransitivityCertificate cert;
  cert.t = t;
  cert.expected = 1;
  for (unsigned i = 0; i < t; ++i) cert.expected *= n - i;
  auto encode = [&](std::span<const Point> tup) {
    std::uint64_t c = 0;
    for (Point x : tup) c = c * n + x;
    return c;
  };
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::vector<Point>> queue;
  std::vector<Point> start(t);
  std::iota(start.begin(), start.end(), Point{0});
  seen.insert(encode(start));
  queue.push_back(start);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : generators) {
      std::vector<Point> img(t);
      for (unsigned i = 0; i < t; ++i) img[i] = g[queue[head][i]];
      if (seen.insert(encode(img)).second) queue.push_back(std::move(img));
    }
  }
  cert.orbit_size = seen.size();
  return cert;
}

enum class DistanceMode { brute, stream };

struct DistanceResult {
  std::size_t distance = 0;
  Permutation witness;
};

namespace detail {

inline std::size_t agreements(std::span<const Point> v, std::span<const Cell> g) {
  std::size_t a = 0;
  for (std::size_t i = 0; i < v.size(); ++i) a += v[i] == g[i];
  return a;
}

}  // namespace detail

/// min over g in G of hamming(v, g), with the lexicographically least
/// minimizing element as witness.
inline DistanceResult distance_to_group(const Permutation& v, const GroupHandle& G,
                                        DistanceMode mode = DistanceMode::brute, unsigned workers = 1) {
  if (v.degree() != G.degree()) throw PermutationError("permutation and group act on different domains");
  const std::size_t n = v.degree();
  const auto vi = v.images();

  if (mode == DistanceMode::brute) {
    G.require_materialized();
    const std::size_t parts = std::max<std::size_t>(1, std::min<std::uint64_t>(G.order(), 64));
    const std::size_t chunk = (G.order() + parts - 1) / parts;
    std::vector<std::pair<std::size_t, std::size_t>> best(parts, {n + 1, 0});  // (agreement deficit, row)
    for_each_partition(parts, workers, [&](std::size_t p) {
      const std::size_t lo = p * chunk, hi = std::min<std::size_t>(G.order(), lo + chunk);
      std::size_t best_d = n + 1, best_r = lo;
      for (std::size_t r = lo; r < hi; ++r) {
        const std::size_t d = n - detail::agreements(vi, G.row(r));
        if (d < best_d) {
          best_d = d;
          best_r = r;
          if (d == 0) break;
        }
      }
      best[p] = {best_d, best_r};
    });
    const auto it = std::min_element(best.begin(), best.end());
    return {it->first, G.element(it->second)};
  }

  std::size_t best_d = n + 1;
  std::vector<Cell> best_row;
  stream_closure(G.generators(), G.order() == 0 ? ~std::uint64_t{0} : G.order(), [&](std::span<const Cell> row) {
    const std::size_t d = n - detail::agreements(vi, row);
    if (d < best_d || (d == best_d && detail::row_less(row, best_row))) {
      best_d = d;
      best_row.assign(row.begin(), row.end());
    }
  });
  return {best_d, Permutation::from_trusted(std::span<const Cell>(best_row))};
}

}  // namespace rankone
