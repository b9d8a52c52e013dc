#pragma once

// Factorization of x^n - 1 over Z4 for odd n: binary factorization followed
// by a one-step Graeffe lift of each irreducible factor.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "z4u/poly.hpp"

namespace z4u {

/// Binary polynomial packed into a word; bit i is the coefficient of x^i.
class F2Poly {
 public:
  static constexpr int kMaxDegree = 63;

  constexpr F2Poly() = default;
  constexpr explicit F2Poly(std::uint64_t bits) : bits_(bits) {}

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }
  int degree() const;
  bool coeff(int i) const { return ((bits_ >> i) & 1u) != 0; }

  friend F2Poly operator+(F2Poly f, F2Poly g) { return F2Poly(f.bits_ ^ g.bits_); }
  /// Throws Error if the product exceeds kMaxDegree.
  friend F2Poly operator*(F2Poly f, F2Poly g);
  friend bool operator==(F2Poly, F2Poly) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Quotient and remainder over F2; throws Error when g is zero.
std::pair<F2Poly, F2Poly> divmod(F2Poly f, F2Poly g);
F2Poly gcd(F2Poly f, F2Poly g);
F2Poly reduce_mod2(const Z4Poly& f);
Z4Poly lift_verbatim(F2Poly f);
std::string to_string(F2Poly f);

/// Irreducible factors of x^n + 1 over F2 for odd n (ascending degree, then
/// ascending as packed words). Throws EvenLength for even n and Error when
/// n is 0 or exceeds F2Poly::kMaxDegree.
std::vector<F2Poly> factor_f2(std::size_t n);

/// Smallest k >= 1 with f | x^k + 1, or 0 if none exists (f(0) == 0).
std::size_t order_of(F2Poly f);

/// Monic Hensel lift to Z4 of an irreducible binary factor of some x^n + 1,
/// n odd. Throws LiftCheckFailed when the result fails f = f2 (mod 2) or
/// f | x^n - 1.
Z4Poly graeffe_lift(F2Poly f2);

struct Z4Factorization {
  std::size_t n = 0;
  std::vector<Z4Poly> factors;

  Z4Poly product() const;
};

/// Monic basic irreducible factors of x^n - 1 over Z4, sorted by ascending
/// degree and then lexicographically on the ascending coefficient sequence.
Z4Factorization factor_xn_minus_1_z4(std::size_t n);

}  // namespace z4u
