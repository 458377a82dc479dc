#pragma once

// Exact covering radius of a materialized permutation group by sweeping all
// of Sym_n. The sweep is split by the image of point 0; each partition keeps
// its own running lower bound L and abandons a candidate v as soon as some
// group element lies within distance L of it.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "rankone/group.hpp"
#include "rankone/parallel.hpp"
#include "rankone/permutation.hpp"

namespace rankone {

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoveringOptions {
  std::size_t max_degree = 10;
  std::uint64_t budget = std::uint64_t{1} << 40;  // group-row comparisons
  unsigned workers = 1;
};

struct CoveringRadiusResult {
  std::size_t radius = 0;
  Permutation witness;  // lexicographically least v attaining the radius
  std::uint64_t nodes = 0;
};

inline CoveringRadiusResult covering_radius_exact(const GroupHandle& G, const CoveringOptions& opt = {}) {
  const std::size_t n = G.degree();
  if (n > opt.max_degree)
    throw InfeasibleError("degree " + std::to_string(n) + " exceeds exhaustive bound " +
                          std::to_string(opt.max_degree) + "; use bounds-only mode");
  G.require_materialized();

  struct Part {
    std::size_t radius = 0;
    std::vector<Point> witness;
    std::uint64_t nodes = 0;
  };
  std::vector<Part> parts(n);
  std::atomic<std::uint64_t> spent{0};

  for_each_partition(n, opt.workers, [&](std::size_t first) {
    Part& out = parts[first];
    std::vector<Point> v(n);
    v[0] = static_cast<Point>(first);
    for (std::size_t i = 1, x = 0; i < n; ++i, ++x) {
      if (x == first) ++x;
      v[i] = static_cast<Point>(x);
    }
    out.witness = v;
    std::size_t L = 0;
    std::uint64_t local = 0;
    do {
      std::size_t best = n;
      bool pruned = false;
      for (std::uint64_t r = 0; r < G.order(); ++r) {
        ++local;
        const std::size_t d = n - detail::agreements(v, G.row(r));
        if (d <= L) {
          pruned = true;
          break;
        }
        best = std::min(best, d);
      }
      if (!pruned && best > L) {
        L = best;
        out.witness = v;
      }
      if (local >= 4096) {
        if ((spent += local) > opt.budget) throw BudgetError("covering radius search exhausted its node budget");
        out.nodes += local;
        local = 0;
      }
    } while (std::next_permutation(v.begin() + 1, v.end()));
    if ((spent += local) > opt.budget) throw BudgetError("covering radius search exhausted its node budget");
    out.nodes += local;
    out.radius = L;
  });

  CoveringRadiusResult res;
  std::size_t best_part = 0;
  for (std::size_t i = 0; i < n; ++i) {
    res.nodes += parts[i].nodes;
    if (parts[i].radius > parts[best_part].radius) best_part = i;
  }
  res.radius = parts[best_part].radius;
  res.witness = Permutation(parts[best_part].witness);
  return res;
}

}  // namespace rankone
