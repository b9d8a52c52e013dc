#include "z4u/poly.hpp"

#include <map>

#include "parse.hpp"

namespace z4u {

RPoly embed(const Z4Poly& f) {
  std::vector<RElem> v;
  v.reserve(f.size());
  for (Z4 c : f.coeffs()) v.emplace_back(c, Z4{});
  return RPoly(std::move(v));
}

RPoly u_times(const Z4Poly& f) {
  std::vector<RElem> v;
  v.reserve(f.size());
  for (Z4 c : f.coeffs()) v.emplace_back(Z4{}, c);
  return RPoly(std::move(v));
}

std::pair<Z4Poly, Z4Poly> split_parts(const RPoly& f) {
  std::vector<Z4> a, b;
  a.reserve(f.size());
  b.reserve(f.size());
  for (RElem c : f.coeffs()) {
    a.push_back(c.a);
    b.push_back(c.b);
  }
  return {Z4Poly(std::move(a)), Z4Poly(std::move(b))};
}

QuotientCtx::QuotientCtx(std::size_t n, RElem lambda) : n_(n), lambda_(lambda) {
  if (n == 0) throw Error("QuotientCtx: length must be positive");
  if (!lambda.is_unit()) throw NonUnit("QuotientCtx: lambda = " + to_string(lambda) + " is not a unit");
}

RPoly QuotientCtx::reduce(const RPoly& f) const {
  if (f.size() <= n_) return f;
  std::vector<RElem> v = f.coeffs();
  // Fold from the top so that each fold lands on an already-final or lower slot.
  for (std::size_t k = v.size(); k-- > n_;) {
    if (v[k].is_zero()) continue;
    v[k - n_] += lambda_ * v[k];
    v[k] = RElem{};
  }
  v.resize(n_);
  return RPoly(std::move(v));
}

RPoly QuotientCtx::mul_mod(const RPoly& f, const RPoly& g) const { return reduce(f * g); }

RPoly QuotientCtx::shift_mod(const RPoly& f, std::size_t k) const { return reduce(f.shifted(k)); }

RPoly poly_add(const RPoly& f, const RPoly& g) { return f + g; }

RPoly poly_mul_mod(const RPoly& f, const RPoly& g, const QuotientCtx& ctx) { return ctx.mul_mod(f, g); }

RPoly twist(const RPoly& f, RElem lambda) {
  if (lambda * lambda != RElem(1)) {
    throw TwistUndefined("twist: lambda = " + to_string(lambda) + " does not square to 1");
  }
  std::vector<RElem> v = f.coeffs();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] *= lambda;
  return RPoly(std::move(v));
}

namespace {

RElem read_coeff(detail::Reader& r) {
  RElem acc(1);
  bool any = false;
  for (;;) {
    const char c = r.peek();
    if (c == '(') {
      r.expect('(');
      acc *= r.read_relem_sum();
      r.expect(')');
    } else if (c == 'u' || r.at_digit()) {
      acc *= r.read_rterm();
    } else {
      break;
    }
    any = true;
  }
  return any ? acc : RElem(1);
}

RPoly parse_impl(std::string_view text) {
  detail::Reader r(text);
  if (r.at_end()) r.fail("empty polynomial");
  std::map<std::size_t, RElem> terms;
  bool neg = r.accept('-');
  for (;;) {
    const std::size_t start = r.pos();
    RElem coeff = read_coeff(r);
    const bool has_coeff = r.pos() != start;
    std::size_t exponent = 0;
    if (r.accept('*')) {
      if (r.peek() != 'x') r.fail("expected 'x' after '*'");
    }
    if (r.accept('x')) {
      exponent = r.accept('^') ? r.read_exponent() : 1;
    } else if (!has_coeff) {
      r.fail("expected term");
    }
    terms[exponent] += neg ? -coeff : coeff;
    if (r.accept('+')) {
      neg = false;
    } else if (r.accept('-')) {
      neg = true;
    } else {
      break;
    }
  }
  if (!r.at_end()) r.fail("unexpected character");
  std::vector<RElem> v(terms.empty() ? 0 : terms.rbegin()->first + 1);
  for (auto [e, c] : terms) v[e] = c;
  return RPoly(std::move(v));
}

std::string format_coeff_term(RElem c, std::size_t e) {
  const bool mixed = !c.a.is_zero() && !c.b.is_zero();
  std::string coeff = to_string(c);
  if (mixed) coeff = "(" + coeff + ")";
  if (e == 0) return coeff;
  std::string mono = e == 1 ? "x" : "x^" + std::to_string(e);
  if (c == RElem(1)) return mono;
  return coeff + mono;
}

template <class Coeff>
std::string format_impl(const Poly<Coeff>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t e = f.size(); e-- > 0;) {
    const RElem c(f[e]);
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    out += format_coeff_term(c, e);
  }
  return out;
}

}  // namespace

RPoly parse_rpoly(std::string_view text) { return parse_impl(text); }

Z4Poly parse_z4poly(std::string_view text) {
  RPoly f = parse_impl(text);
  auto [a, b] = split_parts(f);
  if (!b.is_zero()) throw ParseError("coefficient with a u-part in a Z4 polynomial", 0);
  return a;
}

std::string format_poly(const RPoly& f) { return format_impl(f); }
std::string format_poly(const Z4Poly& f) { return format_impl(f); }

}  // namespace z4u
