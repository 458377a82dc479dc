#pragma once

// Permutations of {0, ..., n-1} acting on the right: i^(gh) = (i^g)^h.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rankone {

using Point = std::uint32_t;

class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x]) throw PermutationError("image array is not a bijection");
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Point> im(n);
    std::iota(im.begin(), im.end(), Point{0});
    return Permutation(std::move(im), Unchecked{});
  }

  /// Builds from an image array already known to be a bijection.
  template <typename T>
  static Permutation from_trusted(std::span<const T> images) {
    return Permutation(std::vector<Point>(images.begin(), images.end()), Unchecked{});
  }

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }
  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<Point> images_;
};

inline void require_same_degree(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree())
    throw PermutationError("domain mismatch: degrees " + std::to_string(g.degree()) + " and " +
                           std::to_string(h.degree()));
}

/// g then h.
inline Permutation compose(const Permutation& g, const Permutation& h) {
  require_same_degree(g, h);
  std::vector<Point> im(g.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = h.images_[g.images_[i]];
  return Permutation(std::move(im), Permutation::Unchecked{});
}

inline Permutation operator*(const Permutation& g, const Permutation& h) { return compose(g, h); }

inline Permutation inverse(const Permutation& g) {
  std::vector<Point> im(g.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[g.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(im), Permutation::Unchecked{});
}

inline Permutation power(const Permutation& g, long long k) {
  Permutation base = k < 0 ? inverse(g) : g;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation r = Permutation::identity(g.degree());
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

inline std::size_t fix_count(const Permutation& g) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < g.degree(); ++i) c += g[i] == i;
  return c;
}

/// Number of points where g and h disagree; equals n - |fix(g h^-1)|.
inline std::size_t hamming(const Permutation& g, const Permutation& h) {
  require_same_degree(g, h);
  std::size_t d = 0;
  for (std::size_t i = 0; i < g.degree(); ++i) d += g[i] != h[i];
  return d;
}

inline std::uint64_t element_order(const Permutation& g) {
  std::vector<bool> seen(g.degree(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

}  // namespace rankone
