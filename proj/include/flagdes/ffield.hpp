#pragma once

// Exact arithmetic in GF(p^a) with polynomial-basis elements, including the
// conjugation automorphism x -> x^q of GF(q^2) over its subfield GF(q).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagdes {

/// An element of GF(p^a): coefficient vector in the polynomial basis,
/// tagged with the field order so mixed-field operands are detected.
struct FieldElement {
  std::uint64_t field_order = 0;
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class field_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), little-endian coefficients.
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly poly_mul(const Poly& f, const Poly& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      h[i + j] = static_cast<std::uint32_t>(
          (h[i + j] + static_cast<std::uint64_t>(f[i]) * g[j]) % p);
  poly_trim(h);
  return h;
}

// Remainder of f modulo a monic divisor m.
inline Poly poly_mod(Poly f, const Poly& m, std::uint64_t p) {
  poly_trim(f);
  const std::size_t dm = m.size() - 1;
  while (f.size() > dm) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dm;
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t sub = lead * m[i] % p;
      std::uint64_t cur = f[shift + i];
      f[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
    }
    poly_trim(f);
    if (f.empty()) break;
  }
  return f;
}

// Irreducibility over GF(p) by trial division against every monic
// polynomial of degree 1..deg/2.
inline bool poly_irreducible(const Poly& m, std::uint64_t p) {
  const std::size_t deg = m.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (poly_mod(m, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// GF(p^a). The modulus is the lexicographically smallest monic irreducible
/// polynomial of degree a over GF(p) (ordered by the radix-p encoding of the
/// low coefficients), so element labels are reproducible across runs.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  Field(std::uint64_t p, std::uint32_t a) : p_(p), a_(a) {
    if (!detail::is_prime_u64(p)) throw field_error("field characteristic must be prime");
    if (a == 0) throw field_error("field extension degree must be positive");
    order_ = 1;
    for (std::uint32_t i = 0; i < a; ++i) {
      if (order_ > kMaxOrder / p) throw field_error("field order above supported bound 2^20");
      order_ *= p;
    }
    modulus_ = smallest_irreducible(p, a);
    if (order_ <= (std::uint64_t{1} << 16)) (void)generator();
  }

  std::uint64_t characteristic() const { return p_; }
  std::uint32_t extension_degree() const { return a_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {order_, std::vector<std::uint32_t>(a_, 0)}; }

  FieldElement one() const {
    auto e = zero();
    e.coeffs[0] = 1;
    return e;
  }

  /// Radix-p decoding of an index in [0, p^a); the canonical element label.
  FieldElement from_index(std::uint64_t idx) const {
    if (idx >= order_) throw field_error("element index out of range");
    auto e = zero();
    for (std::uint32_t i = 0; i < a_; ++i) {
      e.coeffs[i] = static_cast<std::uint32_t>(idx % p_);
      idx /= p_;
    }
    return e;
  }

  std::uint64_t index_of(const FieldElement& x) const {
    check(x);
    std::uint64_t idx = 0;
    for (std::uint32_t i = a_; i-- > 0;) idx = idx * p_ + x.coeffs[i];
    return idx;
  }

  bool is_zero(const FieldElement& x) const {
    check(x);
    return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](auto c) { return c == 0; });
  }

  FieldElement add(const FieldElement& x, const FieldElement& y) const {
    check(x);
    check(y);
    auto r = x;
    for (std::uint32_t i = 0; i < a_; ++i)
      r.coeffs[i] = static_cast<std::uint32_t>((r.coeffs[i] + y.coeffs[i]) % p_);
    return r;
  }

  FieldElement neg(const FieldElement& x) const {
    check(x);
    auto r = x;
    for (auto& c : r.coeffs) c = static_cast<std::uint32_t>((p_ - c) % p_);
    return r;
  }

  FieldElement sub(const FieldElement& x, const FieldElement& y) const { return add(x, neg(y)); }

  FieldElement mul(const FieldElement& x, const FieldElement& y) const {
    check(x);
    check(y);
    auto prod = detail::poly_mul(x.coeffs, y.coeffs, p_);
    auto red = detail::poly_mod(std::move(prod), modulus_, p_);
    auto r = zero();
    std::copy(red.begin(), red.end(), r.coeffs.begin());
    return r;
  }

  /// Square-and-multiply; exponents are nonnegative.
  FieldElement pow(FieldElement x, std::uint64_t e) const {
    check(x);
    auto r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  FieldElement inv(const FieldElement& x) const {
    if (is_zero(x)) throw field_error("inversion of zero");
    return pow(x, order_ - 2);
  }

  /// x -> x^q on GF(q^2); requires the field order to be a square p^(2m).
  FieldElement conjugate(const FieldElement& x) const {
    if (a_ % 2 != 0) throw field_error("conjugation requires a field of square order");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < a_ / 2; ++i) q *= p_;
    return pow(x, q);
  }

  /// Order of the square subfield GF(q) inside this GF(q^2).
  std::uint64_t subfield_order() const {
    if (a_ % 2 != 0) throw field_error("field order is not a square");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < a_ / 2; ++i) q *= p_;
    return q;
  }

  std::uint64_t element_order(const FieldElement& x) const {
    if (is_zero(x)) throw field_error("zero has no multiplicative order");
    std::uint64_t ord = order_ - 1;
    for (std::uint64_t f : prime_factors(order_ - 1))
      while (ord % f == 0 && index_of(pow(x, ord / f)) == index_of(one())) ord /= f;
    return ord;
  }

  /// Smallest-index generator of the (cyclic) multiplicative group.
  FieldElement generator() const {
    if (generator_index_) return from_index(*generator_index_);
    for (std::uint64_t idx = 1; idx < order_; ++idx) {
      auto x = from_index(idx);
      if (element_order(x) == order_ - 1) {
        generator_index_ = idx;
        return x;
      }
    }
    throw std::logic_error("multiplicative group of a finite field must be cyclic");
  }

 private:
  void check(const FieldElement& x) const {
    if (x.field_order != order_ || x.coeffs.size() != a_)
      throw field_error("operand does not belong to this field");
    for (auto c : x.coeffs)
      if (c >= p_) throw field_error("coefficient out of range");
  }

  static std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        fs.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) fs.push_back(n);
    return fs;
  }

  static std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, std::uint32_t a) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < a; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      detail::Poly m(a + 1, 0);
      std::uint64_t t = idx;
      for (std::uint32_t i = 0; i < a; ++i) {
        m[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      m[a] = 1;
      if (detail::poly_irreducible(m, p)) return m;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
  }

  std::uint64_t p_;
  std::uint32_t a_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
  mutable std::optional<std::uint64_t> generator_index_;
};

}  // namespace flagdes
