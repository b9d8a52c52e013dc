#include "z4u/factor.hpp"

#include <algorithm>
#include <bit>

namespace z4u {

int F2Poly::degree() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

F2Poly operator*(F2Poly f, F2Poly g) {
  if (f.is_zero() || g.is_zero()) return {};
  if (f.degree() + g.degree() > F2Poly::kMaxDegree) throw Error("F2Poly: product degree exceeds 63");
  std::uint64_t r = 0;
  for (std::uint64_t b = g.bits_; b != 0; b &= b - 1) r ^= f.bits_ << std::countr_zero(b);
  return F2Poly(r);
}

std::pair<F2Poly, F2Poly> divmod(F2Poly f, F2Poly g) {
  if (g.is_zero()) throw Error("F2Poly: division by zero");
  const int dg = g.degree();
  std::uint64_t q = 0;
  std::uint64_t r = f.bits();
  for (int dr = F2Poly(r).degree(); dr >= dg; dr = F2Poly(r).degree()) {
    q |= std::uint64_t{1} << (dr - dg);
    r ^= g.bits() << (dr - dg);
  }
  return {F2Poly(q), F2Poly(r)};
}

F2Poly gcd(F2Poly f, F2Poly g) {
  while (!g.is_zero()) {
    F2Poly r = divmod(f, g).second;
    f = g;
    g = r;
  }
  return f;
}

F2Poly reduce_mod2(const Z4Poly& f) {
  if (f.degree() > F2Poly::kMaxDegree) throw Error("reduce_mod2: degree exceeds 63");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_unit()) bits |= std::uint64_t{1} << i;
  }
  return F2Poly(bits);
}

Z4Poly lift_verbatim(F2Poly f) {
  std::vector<Z4> v(static_cast<std::size_t>(f.degree() + 1));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.coeff(static_cast<int>(i)) ? 1 : 0;
  return Z4Poly(std::move(v));
}

std::string to_string(F2Poly f) { return format_poly(lift_verbatim(f)); }

std::vector<F2Poly> factor_f2(std::size_t n) {
  if (n == 0) throw Error("factor_f2: n must be positive");
  if (n % 2 == 0) throw EvenLength("factor_f2: n must be odd");
  if (n > static_cast<std::size_t>(F2Poly::kMaxDegree)) throw Error("factor_f2: n exceeds 63");

  F2Poly rest((std::uint64_t{1} << n) | 1u);
  std::vector<F2Poly> out;
  // Trial division in order of degree: the first divisor found at each
  // degree cannot have a smaller factor left in `rest`, so it is irreducible.
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    const std::uint64_t lo = std::uint64_t{1} << d;
    for (std::uint64_t m = 0; m < lo && 2 * d <= rest.degree(); m += 2) {
      const F2Poly p(lo | m | 1u);  // x does not divide x^n + 1
      for (;;) {
        auto [q, r] = divmod(rest, p);
        if (!r.is_zero()) break;
        out.push_back(p);
        rest = q;
      }
    }
  }
  if (rest.degree() >= 1) out.push_back(rest);
  std::sort(out.begin(), out.end(), [](F2Poly f, F2Poly g) {
    return f.degree() != g.degree() ? f.degree() < g.degree() : f.bits() < g.bits();
  });
  return out;
}

std::size_t order_of(F2Poly f) {
  const int d = f.degree();
  if (d < 1 || !f.coeff(0)) return 0;
  const std::uint64_t bound = d >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << d);
  F2Poly xk = divmod(F2Poly(2), f).second;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (xk == F2Poly(1)) return static_cast<std::size_t>(k);
    // xk <- x * xk mod f, without overflowing the top bit
    std::uint64_t b = xk.bits() << 1;
    if ((b >> d) & 1u) b ^= f.bits();
    xk = F2Poly(b);
  }
  return 0;
}

Z4Poly graeffe_lift(F2Poly f2) {
  const int d = f2.degree();
  if (d < 1) throw LiftCheckFailed("graeffe_lift: input must have positive degree");
  const std::size_t n = order_of(f2);
  if (n == 0 || n % 2 == 0) {
    throw LiftCheckFailed("graeffe_lift: " + to_string(f2) + " divides no x^n + 1 with n odd");
  }

  std::vector<Z4> even, odd;
  for (int i = 0; i <= d; ++i) {
    (i % 2 == 0 ? even : odd).resize(static_cast<std::size_t>(i / 2 + 1));
    (i % 2 == 0 ? even : odd)[static_cast<std::size_t>(i / 2)] = f2.coeff(i) ? 1 : 0;
  }
  // f(x) f(-x) = e(x^2)^2 - x^2 o(x^2)^2 = g(x^2) with g = e^2 - y o^2.
  const Z4Poly e(std::move(even));
  const Z4Poly o(std::move(odd));
  Z4Poly g = e * e - (o * o).shifted(1);
  if (g.leading() != Z4(1)) g = Z4(3) * g;

  if (reduce_mod2(g) != f2) throw LiftCheckFailed("graeffe_lift: lift of " + to_string(f2) + " is not congruent mod 2");
  if (g.leading() != Z4(1)) throw LiftCheckFailed("graeffe_lift: lift of " + to_string(f2) + " is not monic");
  if (!divmod_monic(x_n_minus_one<Z4>(n), g).second.is_zero()) {
    throw LiftCheckFailed("graeffe_lift: lift of " + to_string(f2) + " does not divide x^" + std::to_string(n) + "-1");
  }
  return g;
}

Z4Poly Z4Factorization::product() const {
  Z4Poly p{Z4(1)};
  for (const auto& f : factors) p *= f;
  return p;
}

Z4Factorization factor_xn_minus_1_z4(std::size_t n) {
  if (n % 2 == 0) throw EvenLength("n must be odd");
  Z4Factorization out{n, {}};
  for (F2Poly f : factor_f2(n)) out.factors.push_back(graeffe_lift(f));
  std::sort(out.factors.begin(), out.factors.end(), [](const Z4Poly& f, const Z4Poly& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    return f.coeffs() < g.coeffs();
  });
  return out;
}

}  // namespace z4u
