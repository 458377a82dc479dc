#pragma once

// Exact arithmetic in GF(p^f) with a fixed modulus, plus the quadratic
// extension machinery (conjugation x -> x^q, norm, trace) used by the
// unitary constructions.
//
// Elements are canonical indices: the coefficient vector (c0, ..., c_{f-1})
// of the polynomial-basis representative read as a base-p integer, c0 least
// significant. Zero is index 0 and one is index 1 for every context.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rankone {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Elem = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

inline unsigned inv_mod(unsigned a, unsigned p) {
  // p is prime and small; Fermat.
  std::uint64_t r = 1, b = a % p;
  unsigned e = p - 2;
  while (e) {
    if (e & 1u) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<unsigned>(r);
}

// Dense polynomials over GF(p); index i holds the coefficient of x^i.
using Poly = std::vector<unsigned>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const unsigned lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const unsigned c = static_cast<unsigned>(std::uint64_t{a.back()} * lead_inv % p);
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<unsigned>((a[shift + i] + std::uint64_t{p - c} * m[i]) % p);
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<unsigned>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return poly_mod(std::move(r), m, p);
}

inline Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// Irreducibility of a monic polynomial over GF(p), given as [c0, ..., c_f].
/// Uses gcd(m, x^(p^i) - x) = 1 for 1 <= i <= f/2.
inline bool is_irreducible(const std::vector<unsigned>& coeffs, unsigned p) {
  detail::Poly m(coeffs.begin(), coeffs.end());
  detail::trim(m);
  if (m.size() < 2) return false;
  const std::size_t f = m.size() - 1;
  if (f == 1) return true;
  detail::Poly xpow{0, 1};  // x^(p^i) mod m
  for (std::size_t i = 1; i <= f / 2; ++i) {
    detail::Poly acc{1};
    detail::Poly base = xpow;
    unsigned e = p;
    while (e) {
      if (e & 1u) acc = detail::poly_mulmod(acc, base, m, p);
      base = detail::poly_mulmod(base, base, m, p);
      e >>= 1;
    }
    xpow = acc;
    detail::Poly diff = xpow;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    detail::trim(diff);
    if (diff.empty()) return false;  // x^(p^i) = x forces a factor of degree dividing i
    if (detail::poly_gcd(m, diff, p).size() > 1) return false;
  }
  return true;
}

/// Lexicographically least monic irreducible of degree f, comparing
/// (c0, c1, ..., c_{f-1}) with c0 most significant.
inline std::vector<unsigned> default_modulus(unsigned p, unsigned f) {
  const std::uint64_t count = detail::ipow(p, f);
  std::vector<unsigned> coeffs(f + 1, 0);
  coeffs[f] = 1;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t rest = code;
    for (unsigned i = f; i-- > 0;) {
      coeffs[i] = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    // coeffs[0] now carries the most significant digit
    if (is_irreducible(coeffs, p)) return coeffs;
  }
  throw FieldError("no irreducible polynomial found");
}

class FieldCtx {
 public:
  static constexpr std::uint64_t kTableLimit = 1u << 16;
  static constexpr std::uint64_t kMaxOrder = 1u << 24;

  FieldCtx(unsigned p, unsigned f, std::optional<std::vector<unsigned>> modulus = std::nullopt,
           bool use_tables = true)
      : p_(p), f_(f) {
    if (!detail::is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (f == 0) throw FieldError("extension degree must be positive");
    const std::uint64_t q = detail::ipow(p, f);
    if (q > kMaxOrder) throw FieldError("field order too large");
    q_ = static_cast<std::uint32_t>(q);
    if (modulus) {
      if (modulus->size() != f + 1) throw FieldError("modulus degree does not match extension degree");
      if (modulus->back() != 1) throw FieldError("modulus must be monic");
      for (unsigned c : *modulus)
        if (c >= p) throw FieldError("modulus coefficient out of range");
      if (!is_irreducible(*modulus, p)) throw FieldError("modulus is reducible");
      modulus_ = *modulus;
    } else {
      modulus_ = default_modulus(p, f);
    }
    pow_p_.resize(f + 1);
    pow_p_[0] = 1;
    for (unsigned i = 1; i <= f; ++i) pow_p_[i] = pow_p_[i - 1] * p;

    if (p != 2 && q_ <= 1024) {
      add_table_.resize(std::size_t{q_} * q_);
      for (Elem a = 0; a < q_; ++a)
        for (Elem b = 0; b < q_; ++b) add_table_[std::size_t{a} * q_ + b] = add_digits(a, b);
    }
    neg_table_.resize(q_);
    for (Elem a = 0; a < q_; ++a) neg_table_[a] = neg_digits(a);

    primitive_ = find_primitive();
    if (use_tables && q_ <= kTableLimit) {
      exp_.resize(2 * std::size_t{q_});
      log_.assign(q_, 0);
      Elem x = 1;
      for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = poly_mul(x, primitive_);
      }
      for (std::uint32_t i = q_ - 1; i < exp_.size(); ++i) exp_[i] = exp_[i - (q_ - 1)];
    }
    frob_.resize(q_);
    for (Elem a = 0; a < q_; ++a) frob_[a] = pow(a, p_);
  }

  unsigned p() const { return p_; }
  unsigned f() const { return f_; }
  std::uint32_t q() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  bool has_tables() const { return !exp_.empty(); }

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return neg_table_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[log_[a] + log_[b]];
    return poly_mul(a, b);
  }

  Elem inv(Elem a) const {
    if (a == 0) throw FieldError("inversion of zero");
    if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Square-and-multiply; negative exponents go through the inverse.
  Elem pow(Elem a, long long e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    if (a == 0) return e == 0 ? 1 : 0;
    if (!exp_.empty()) {
      const std::uint64_t k = (std::uint64_t{log_[a]} * (static_cast<std::uint64_t>(e) % (q_ - 1))) % (q_ - 1);
      return exp_[k];
    }
    Elem r = 1;
    while (e) {
      if (e & 1) r = poly_mul(r, a);
      a = poly_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// x^(p^k); k is taken modulo f, so negative k gives the inverse automorphism.
  Elem frobenius(Elem x, long long k = 1) const {
    long long r = k % static_cast<long long>(f_);
    if (r < 0) r += f_;
    for (long long i = 0; i < r; ++i) x = frob_[x];
    return x;
  }

  /// Least-index generator of the multiplicative group.
  Elem primitive_element() const { return primitive_; }

  std::uint64_t multiplicative_order(Elem a) const {
    if (a == 0) throw FieldError("zero has no multiplicative order");
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t r : detail::prime_factors(q_ - 1)) {
      while (ord % r == 0 && pow(a, static_cast<long long>(ord / r)) == 1) ord /= r;
    }
    return ord;
  }

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  std::vector<unsigned> coefficients(Elem a) const {
    std::vector<unsigned> c(f_);
    for (unsigned i = 0; i < f_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }

  Elem from_coefficients(std::span<const unsigned> c) const {
    if (c.size() > f_) throw FieldError("too many coefficients");
    Elem r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * p_ + c[i] % p_;
    return r;
  }

  bool operator==(const FieldCtx& o) const { return p_ == o.p_ && f_ == o.f_ && modulus_ == o.modulus_; }

  // ---- quadratic extension view -------------------------------------------

  bool is_quadratic_extension() const { return base_ != nullptr; }
  /// Cardinality of the declared base field GF(q) when this is GF(q^2).
  std::uint32_t base_q() const {
    require_extension();
    return base_->q();
  }
  const FieldCtx& base() const {
    require_extension();
    return *base_;
  }

  Elem conj(Elem x) const {
    require_extension();
    return frobenius(x, base_->f());
  }
  Elem norm(Elem x) const { return mul(x, conj(x)); }
  Elem trace(Elem x) const { return add(x, conj(x)); }

  bool in_base(Elem x) const { return conj(x) == x; }
  /// Embedding GF(q) -> GF(q^2) as an explicit table over base indices.
  Elem embed(Elem base_elem) const {
    require_extension();
    return embed_.at(base_elem);
  }
  /// Inverse of embed; throws for elements outside the subfield.
  Elem to_base(Elem x) const {
    require_extension();
    const Elem r = project_.at(x);
    if (r == kNone) throw FieldError("element is not in the base subfield");
    return r;
  }
  /// The q+1 elements with x^(q+1) = 1, ascending.
  std::vector<Elem> norm_one_elements() const {
    std::vector<Elem> out;
    for (Elem x = 1; x < q_; ++x)
      if (norm(x) == 1) out.push_back(x);
    return out;
  }

  /// GF(q^2) built as a degree-2f extension of GF(p), with GF(q) identified
  /// through the least-index root of the base modulus.
  static FieldCtx quadratic_extension(unsigned p, unsigned f,
                                      std::optional<std::vector<unsigned>> base_modulus = std::nullopt,
                                      bool use_tables = true) {
    FieldCtx ext(p, 2 * f, std::nullopt, use_tables);
    auto base = std::make_shared<const FieldCtx>(p, f, std::move(base_modulus), use_tables);
    ext.attach_base(std::move(base));
    return ext;
  }

 private:
  static constexpr Elem kNone = ~Elem{0};

  void require_extension() const {
    if (!base_) throw FieldError("context is not a quadratic extension");
  }

  void attach_base(std::shared_ptr<const FieldCtx> base) {
    const auto& bm = base->modulus();
    Elem root = kNone;
    for (Elem x = 0; x < q_ && root == kNone; ++x) {
      Elem acc = 0;
      for (std::size_t i = bm.size(); i-- > 0;) acc = add(mul(acc, x), from_int(bm[i]));
      if (acc == 0) root = x;
    }
    if (root == kNone) throw FieldError("base modulus has no root in the extension");
    embed_.resize(base->q());
    project_.assign(q_, kNone);
    for (Elem b = 0; b < base->q(); ++b) {
      auto c = base->coefficients(b);
      Elem acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) acc = add(mul(acc, root), from_int(c[i]));
      embed_[b] = acc;
      project_[acc] = b;
    }
    base_ = std::move(base);
  }

  Elem add_digits(Elem a, Elem b) const {
    Elem r = 0;
    for (unsigned i = 0; i < f_; ++i) {
      const unsigned d = (a / pow_p_[i] % p_ + b / pow_p_[i] % p_) % p_;
      r += d * pow_p_[i];
    }
    return r;
  }

  Elem neg_digits(Elem a) const {
    Elem r = 0;
    for (unsigned i = 0; i < f_; ++i) {
      const unsigned d = a / pow_p_[i] % p_;
      r += ((p_ - d) % p_) * pow_p_[i];
    }
    return r;
  }

  Elem poly_mul(Elem a, Elem b) const {
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    detail::Poly prod(2 * f_, 0);
    for (unsigned i = 0; i < f_; ++i) {
      if (!ca[i]) continue;
      for (unsigned j = 0; j < f_; ++j)
        prod[i + j] = static_cast<unsigned>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
    }
    for (unsigned d = 2 * f_ - 1; d >= f_; --d) {
      const unsigned c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      for (unsigned k = 0; k < f_; ++k)
        prod[d - f_ + k] = static_cast<unsigned>((prod[d - f_ + k] + std::uint64_t{p_ - c} * modulus_[k]) % p_);
    }
    prod.resize(f_);
    return from_coefficients(prod);
  }

  Elem find_primitive() const {
    if (q_ == 2) return 1;
    const auto factors = detail::prime_factors(q_ - 1);
    for (Elem x = 2; x < q_; ++x) {
      bool ok = true;
      for (std::uint64_t r : factors) {
        Elem acc = 1, base = x;
        std::uint64_t e = (q_ - 1) / r;
        while (e) {
          if (e & 1u) acc = poly_mul(acc, base);
          base = poly_mul(base, base);
          e >>= 1;
        }
        if (acc == 1) {
          ok = false;
          break;
        }
      }
      if (ok) return x;
    }
    throw FieldError("no primitive element");
  }

  unsigned p_;
  unsigned f_;
  std::uint32_t q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> frob_;
  Elem primitive_ = 1;
  std::shared_ptr<const FieldCtx> base_;
  std::vector<Elem> embed_;
  std::vector<Elem> project_;
};

inline FieldCtx make_field(unsigned p, unsigned f, std::optional<std::vector<unsigned>> modulus = std::nullopt) {
  return FieldCtx(p, f, std::move(modulus));
}

/// Checked element: carries its context so mixed-context arithmetic is caught.
class FieldElement {
 public:
  FieldElement(const FieldCtx& ctx, Elem index) : ctx_(&ctx), index_(index) {
    if (index >= ctx.q()) throw FieldError("element index out of range");
  }

  const FieldCtx& ctx() const { return *ctx_; }
  Elem index() const { return index_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {*a.ctx_, a.ctx_->add(a.index_, b.index_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {*a.ctx_, a.ctx_->sub(a.index_, b.index_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {*a.ctx_, a.ctx_->mul(a.index_, b.index_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {*a.ctx_, a.ctx_->div(a.index_, b.index_)};
  }
  FieldElement operator-() const { return {*ctx_, ctx_->neg(index_)}; }
  FieldElement inv() const { return {*ctx_, ctx_->inv(index_)}; }
  FieldElement pow(long long e) const { return {*ctx_, ctx_->pow(index_, e)}; }
  FieldElement frobenius(long long k = 1) const { return {*ctx_, ctx_->frobenius(index_, k)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return a.index_ == b.index_;
  }

 private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (a.ctx_ != b.ctx_ && !(*a.ctx_ == *b.ctx_)) throw FieldError("field context mismatch");
  }

  const FieldCtx* ctx_;
  Elem index_;
};

enum class ArithOp { add, mul, neg, inv, pow };

/// Dispatcher over the basic operations; pow takes its exponent separately.
inline FieldElement arith(ArithOp op, std::span<const FieldElement> operands, long long exponent = 0) {
  auto need = [&](std::size_t n) {
    if (operands.size() != n) throw FieldError("wrong operand count");
  };
  switch (op) {
    case ArithOp::add:
      need(2);
      return operands[0] + operands[1];
    case ArithOp::mul:
      need(2);
      return operands[0] * operands[1];
    case ArithOp::neg:
      need(1);
      return -operands[0];
    case ArithOp::inv:
      need(1);
      return operands[0].inv();
    case ArithOp::pow:
      need(1);
      return operands[0].pow(exponent);
  }
  throw FieldError("unknown operation");
}

struct ConjNormTrace {
  Elem conj;
  Elem norm;
  Elem trace;
};

inline ConjNormTrace conj_norm_trace(const FieldCtx& ctx, Elem x) {
  return {ctx.conj(x), ctx.norm(x), ctx.trace(x)};
}

}  // namespace rankone
