#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "z4u/errors.hpp"
#include "z4u/poly.hpp"

using namespace z4u;

namespace {

RPoly random_poly(std::mt19937_64& rng, std::size_t n) { return RPoly(oracle::random_rvector(rng, n)); }

}  // namespace

TEST_CASE("poly_add") {
  const RPoly x_plus_1 = parse_rpoly("x+1");
  CHECK(poly_add(x_plus_1, RPoly{}) == x_plus_1);
  CHECK(poly_add(x_plus_1, parse_rpoly("3x+3")).is_zero());
  CHECK(poly_add(parse_rpoly("2x^2+u"), parse_rpoly("2x^2+u")) == RPoly{RElem(0, 2)});
}

TEST_CASE("poly_mul_mod folds x^n onto lambda") {
  const QuotientCtx c3(3, kOnePlus2u);
  CHECK(poly_mul_mod(parse_rpoly("x^2"), parse_rpoly("x"), c3) == RPoly{kOnePlus2u});

  const QuotientCtx cyc3(3, RElem(1));
  CHECK(poly_mul_mod(parse_rpoly("x^2"), parse_rpoly("x^2"), cyc3) == parse_rpoly("x"));

  // u * x^7 = u * lambda = u in R[x]/<x^7 - (1+2u)>.
  const QuotientCtx c7(7, kOnePlus2u);
  CHECK(poly_mul_mod(parse_rpoly("ux^6"), parse_rpoly("x"), c7) == RPoly{kU});
  CHECK(poly_mul_mod(parse_rpoly("x^6"), parse_rpoly("x"), c7) == RPoly{kOnePlus2u});
}

TEST_CASE("QuotientCtx rejects non-units and n = 0") {
  CHECK_THROWS_AS(QuotientCtx(3, RElem(2, 1)), NonUnit);
  CHECK_THROWS_AS(QuotientCtx(0, RElem(1)), Error);
}

TEST_CASE("twist") {
  CHECK(twist(parse_rpoly("x"), kOnePlus2u) == RPoly{RElem(0), kOnePlus2u});
  CHECK(twist(parse_rpoly("3x"), kOnePlus2u) == RPoly{RElem(0), kThreePlus2u});
  CHECK_THROWS_AS(twist(parse_rpoly("x"), RElem(1, 1)), TwistUndefined);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const RPoly f = random_poly(rng, 9);
    CHECK(twist(twist(f, kOnePlus2u), kOnePlus2u) == f);
    CHECK(twist(twist(f, kThreePlus2u), kThreePlus2u) == f);
  }
}

TEST_CASE("parse and format") {
  const RPoly f = parse_rpoly("3x^4+2x^3+x^2+(3+2u)x+3");
  CHECK(f.coeffs() == std::vector<RElem>{RElem(3), kThreePlus2u, RElem(1), RElem(2), RElem(3)});
  CHECK(parse_rpoly("0").is_zero());
  CHECK(parse_rpoly("x^8+(1+2u)x^7+x^6+(1+2u)x^5+x^4+(1+2u)x^3+3x^2+(3+2u)x+3").degree() == 8);

  // Untwisted product spelling equals the reduced one.
  CHECK(parse_rpoly("3x^4+2x^3+x^2+3(1+2u)x+3") == f);
  CHECK(parse_rpoly("3 * x ^ 2 + 2ux + 1") == RPoly{RElem(1), RElem(0, 2), RElem(3)});
  CHECK(parse_rpoly("x^2+x^2") == RPoly{RElem(0), RElem(0), RElem(2)});
  CHECK(parse_rpoly("x^7-1") == RPoly{RElem(3), 0, 0, 0, 0, 0, 0, RElem(1)});

  CHECK(format_poly(parse_rpoly("1+2x+x^2+(3+2u)x^3")) == "(3+2u)x^3+x^2+2x+1");
  CHECK(format_poly(RPoly{}) == "0");
  CHECK(format_poly(RPoly{kThreePlus2u}) == "(3+2u)");
  CHECK(format_poly(RPoly{RElem(0), RElem(0, 2)}) == "2ux");
  CHECK(format_poly(parse_z4poly("x^3+2x^2+x+3")) == "x^3+2x^2+x+3");

  CHECK_THROWS_AS(parse_rpoly(""), ParseError);
  CHECK_THROWS_AS(parse_rpoly("x^"), ParseError);
  CHECK_THROWS_AS(parse_rpoly("x+y"), ParseError);
  CHECK_THROWS_AS(parse_rpoly("(1+2u"), ParseError);
  CHECK_THROWS_AS(parse_z4poly("ux+1"), ParseError);
  try {
    parse_rpoly("x^2+3y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("format round-trips through parse") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const RPoly f = random_poly(rng, 1 + rng() % 12);
    CHECK(parse_rpoly(format_poly(f)) == f);
  }
}

TEST_CASE("quotient ring axioms and degree contract") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 2u, 5u, 7u, 8u}) {
    for (RElem lambda : {RElem(1), kOnePlus2u, RElem(3, 1)}) {
      const QuotientCtx ctx(n, lambda);
      for (int i = 0; i < 60; ++i) {
        const RPoly f = random_poly(rng, n), g = random_poly(rng, n), h = random_poly(rng, n);
        const RPoly fg = ctx.mul_mod(f, g);
        CHECK(fg.degree() < static_cast<long>(n));
        CHECK(fg == ctx.mul_mod(g, f));
        CHECK(ctx.mul_mod(fg, h) == ctx.mul_mod(f, ctx.mul_mod(g, h)));
        CHECK(ctx.mul_mod(f, g + h) == fg + ctx.mul_mod(f, h));
        // Independent shift-based product.
        CHECK(fg.padded(n) == oracle::mul_quotient(f.padded(n), g.padded(n), lambda));
      }
    }
  }
}

TEST_CASE("twist is a ring isomorphism onto the constacyclic quotient for odd n") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {1u, 3u, 5u, 7u, 9u, 15u}) {
    const QuotientCtx cyclic(n, RElem(1));
    for (RElem lambda : {kOnePlus2u, kThreePlus2u}) {
      const QuotientCtx consta(n, lambda);
      for (int i = 0; i < 100; ++i) {
        const RPoly f = random_poly(rng, n), g = random_poly(rng, n);
        CHECK(twist(cyclic.mul_mod(f, g), consta) == consta.mul_mod(twist(f, consta), twist(g, consta)));
        CHECK(twist(f + g, consta) == twist(f, consta) + twist(g, consta));
      }
    }
  }
}

TEST_CASE("twist fails the homomorphism law for even n") {
  // lambda^n = 1 for even n, so x^n - 1 maps to x^n - 1 rather than x^n - lambda.
  const QuotientCtx cyclic(2, RElem(1));
  const QuotientCtx consta(2, kOnePlus2u);
  const RPoly x = parse_rpoly("x");
  CHECK(twist(cyclic.mul_mod(x, x), consta) != consta.mul_mod(twist(x, consta), twist(x, consta)));
}

TEST_CASE("divmod_monic") {
  const Z4Poly f = parse_z4poly("x^7-1");
  const Z4Poly g = parse_z4poly("x^3+2x^2+x+3");
  auto [q, r] = divmod_monic(f, g);
  CHECK(r.is_zero());
  CHECK(q * g == f);
  CHECK_THROWS_AS(divmod_monic(f, parse_z4poly("2x+1")), Error);
}

TEST_CASE("embedding helpers") {
  const Z4Poly a = parse_z4poly("x^2+3");
  const Z4Poly b = parse_z4poly("2x+1");
  auto [pa, pb] = split_parts(embed(a) + u_times(b));
  CHECK(pa == a);
  CHECK(pb == b);
}
