#pragma once

// Dense polynomials over Z4 and R, and the quotient rings R[x]/<x^n - lambda>.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "z4u/errors.hpp"
#include "z4u/ring.hpp"

namespace z4u {

/// Dense polynomial with coefficients ascending by exponent. The coefficient
/// sequence never carries trailing zeros; the zero polynomial is empty.
template <class Coeff>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { normalize(); }

  static Poly monomial(Coeff c, std::size_t exponent) {
    std::vector<Coeff> v(exponent + 1);
    v[exponent] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Coeff{}; }
  Coeff leading() const { return c_.empty() ? Coeff{} : c_.back(); }

  /// Coefficients padded (or truncated) to exactly len entries.
  std::vector<Coeff> padded(std::size_t len) const {
    std::vector<Coeff> v(c_.begin(), c_.begin() + static_cast<long>(std::min(len, c_.size())));
    v.resize(len);
    return v;
  }

  friend Poly operator+(const Poly& f, const Poly& g) {
    std::vector<Coeff> v(std::max(f.size(), g.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] + g[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& f, const Poly& g) {
    std::vector<Coeff> v(std::max(f.size(), g.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] - g[i];
    return Poly(std::move(v));
  }
  Poly operator-() const { return Poly() - *this; }

  friend Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Coeff> v(f.size() + g.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f.c_[i] == Coeff{}) continue;
      for (std::size_t j = 0; j < g.size(); ++j) v[i + j] += f.c_[i] * g.c_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(Coeff s, const Poly& f) {
    std::vector<Coeff> v(f.c_);
    for (auto& x : v) x = s * x;
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Multiplies by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Coeff> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == Coeff{}) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using Z4Poly = Poly<Z4>;
using RPoly = Poly<RElem>;

/// Quotient and remainder of f by a monic divisor g. Exact over any
/// commutative ring because g's leading coefficient is 1.
template <class Coeff>
std::pair<Poly<Coeff>, Poly<Coeff>> divmod_monic(const Poly<Coeff>& f, const Poly<Coeff>& g) {
  if (g.is_zero() || g.leading() != Coeff(1)) throw Error("divmod_monic: divisor must be monic");
  std::vector<Coeff> rem = f.coeffs();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  if (rem.size() <= dg) return {Poly<Coeff>{}, f};
  std::vector<Coeff> quo(rem.size() - dg);
  for (std::size_t k = rem.size(); k-- > dg;) {
    const Coeff c = rem[k];
    if (c == Coeff{}) continue;
    quo[k - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= c * g[j];
  }
  return {Poly<Coeff>(std::move(quo)), Poly<Coeff>(std::move(rem))};
}

/// x^n - 1 over the coefficient ring.
template <class Coeff>
Poly<Coeff> x_n_minus_one(std::size_t n) {
  return Poly<Coeff>::monomial(Coeff(1), n) - Poly<Coeff>{Coeff(1)};
}

/// Embeds a Z4 polynomial into R[x].
RPoly embed(const Z4Poly& f);
/// u * f for f over Z4.
RPoly u_times(const Z4Poly& f);
/// Splits f = a(x) + u b(x).
std::pair<Z4Poly, Z4Poly> split_parts(const RPoly& f);

/// Length n and constacyclic constant lambda; fixes R[x]/<x^n - lambda>.
class QuotientCtx {
 public:
  /// Throws NonUnit unless lambda is a unit, Error if n == 0.
  QuotientCtx(std::size_t n, RElem lambda);

  std::size_t n() const { return n_; }
  RElem lambda() const { return lambda_; }

  /// Folds every x^(n+k) to lambda * x^k; result has degree < n.
  RPoly reduce(const RPoly& f) const;
  RPoly mul_mod(const RPoly& f, const RPoly& g) const;
  /// x^k * f reduced.
  RPoly shift_mod(const RPoly& f, std::size_t k) const;

  friend bool operator==(const QuotientCtx&, const QuotientCtx&) = default;

 private:
  std::size_t n_;
  RElem lambda_;
};

RPoly poly_add(const RPoly& f, const RPoly& g);
RPoly poly_mul_mod(const RPoly& f, const RPoly& g, const QuotientCtx& ctx);

/// The substitution x -> lambda*x: coefficient i is multiplied by lambda^i.
/// Throws TwistUndefined unless lambda^2 == 1.
RPoly twist(const RPoly& f, RElem lambda);
inline RPoly twist(const RPoly& f, const QuotientCtx& ctx) { return twist(f, ctx.lambda()); }

/// Grammar: terms joined by '+' (or '-'); a term is a coefficient, a power of
/// x, or both, e.g. "(3+2u)x^3+x^2+2x+1", "3(1+2u)x", "2ux^4". Whitespace is
/// ignored and repeated exponents accumulate.
RPoly parse_rpoly(std::string_view text);
/// Same grammar; throws ParseError if any coefficient has a u-part.
Z4Poly parse_z4poly(std::string_view text);

/// Canonical rendering, descending exponents, mixed coefficients parenthesized.
std::string format_poly(const RPoly& f);
std::string format_poly(const Z4Poly& f);

}  // namespace z4u
