#include "doctest.h"
#include "oracle.hpp"
#include "z4u/errors.hpp"
#include "z4u/factor.hpp"

using namespace z4u;

namespace {

F2Poly f2(const char* text) { return reduce_mod2(parse_z4poly(text)); }

oracle::IntPoly ints(const Z4Poly& f) {
  oracle::IntPoly v;
  for (Z4 c : f.coeffs()) v.push_back(c.value());
  return v;
}

oracle::IntPoly ints(F2Poly f) {
  oracle::IntPoly v;
  for (int i = 0; i <= f.degree(); ++i) v.push_back(f.coeff(i) ? 1 : 0);
  return v;
}

}  // namespace

TEST_CASE("factor_f2") {
  CHECK(factor_f2(1) == std::vector<F2Poly>{f2("x+1")});
  CHECK(factor_f2(7) == std::vector<F2Poly>{f2("x+1"), f2("x^3+x+1"), f2("x^3+x^2+1")});
  CHECK(factor_f2(9) == std::vector<F2Poly>{f2("x+1"), f2("x^2+x+1"), f2("x^6+x^3+1")});
  CHECK_THROWS_AS(factor_f2(4), EvenLength);
  CHECK_THROWS_AS(factor_f2(0), Error);
  CHECK_THROWS_AS(factor_f2(65), Error);
}

TEST_CASE("factor_f2 products and irreducibility against brute force") {
  for (std::size_t n = 1; n <= 25; n += 2) {
    oracle::IntPoly prod{1};
    for (F2Poly f : factor_f2(n)) {
      CHECK(oracle::irreducible_f2(ints(f)));
      prod = oracle::mul_mod(prod, ints(f), 2);
    }
    oracle::IntPoly expected(n + 1, 0);
    expected[0] = expected[n] = 1;
    CHECK(prod == expected);
  }
}

TEST_CASE("graeffe_lift") {
  CHECK(graeffe_lift(f2("x+1")) == parse_z4poly("x+3"));
  CHECK(graeffe_lift(f2("x^3+x+1")) == parse_z4poly("x^3+2x^2+x+3"));
  CHECK(graeffe_lift(f2("x^3+x^2+1")) == parse_z4poly("x^3+3x^2+2x+3"));
  CHECK(graeffe_lift(f2("x^2+x+1")) == parse_z4poly("x^2+x+1"));

  // x divides no x^n + 1; (x+1)^2 only divides x^n + 1 for even n.
  CHECK_THROWS_AS(graeffe_lift(f2("x")), LiftCheckFailed);
  CHECK_THROWS_AS(graeffe_lift(f2("x^2+1")), LiftCheckFailed);
  CHECK_THROWS_AS(graeffe_lift(F2Poly(1)), LiftCheckFailed);
}

TEST_CASE("order_of") {
  CHECK(order_of(f2("x+1")) == 1);
  CHECK(order_of(f2("x^2+x+1")) == 3);
  CHECK(order_of(f2("x^3+x+1")) == 7);
  CHECK(order_of(f2("x^6+x^3+1")) == 9);
  CHECK(order_of(f2("x")) == 0);
}

TEST_CASE("factor_xn_minus_1_z4") {
  CHECK(factor_xn_minus_1_z4(1).factors == std::vector<Z4Poly>{parse_z4poly("x+3")});
  CHECK(factor_xn_minus_1_z4(3).factors == std::vector<Z4Poly>{parse_z4poly("x+3"), parse_z4poly("x^2+x+1")});
  CHECK(factor_xn_minus_1_z4(7).factors ==
        std::vector<Z4Poly>{parse_z4poly("x+3"), parse_z4poly("x^3+2x^2+x+3"), parse_z4poly("x^3+3x^2+2x+3")});
  CHECK(factor_xn_minus_1_z4(9).factors ==
        std::vector<Z4Poly>{parse_z4poly("x+3"), parse_z4poly("x^2+x+1"), parse_z4poly("x^6+x^3+1")});
  CHECK_THROWS_AS(factor_xn_minus_1_z4(6), EvenLength);
}

TEST_CASE("factorization invariants for odd n up to 25") {
  for (std::size_t n : {1u, 3u, 5u, 7u, 9u, 11u, 13u, 15u, 17u, 19u, 21u, 23u, 25u}) {
    CAPTURE(n);
    const Z4Factorization f = factor_xn_minus_1_z4(n);
    // Product by the oracle's own multiplication.
    oracle::IntPoly prod{1};
    for (const auto& g : f.factors) prod = oracle::mul_mod(prod, ints(g), 4);
    oracle::IntPoly expected(n + 1, 0);
    expected[0] = 3;
    expected[n] = 1;
    CHECK(prod == expected);
    CHECK(f.product() == x_n_minus_one<Z4>(n));

    CHECK(f.factors.size() == oracle::cyclotomic_coset_count(n));
    const auto binary = factor_f2(n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      const F2Poly r = reduce_mod2(f.factors[i]);
      CHECK(f.factors[i].leading() == Z4(1));
      CHECK(oracle::irreducible_f2(ints(r)));
      CHECK(std::find(binary.begin(), binary.end(), r) != binary.end());
      CHECK(graeffe_lift(r) == f.factors[i]);
      for (std::size_t j = i + 1; j < f.factors.size(); ++j) CHECK(gcd(r, reduce_mod2(f.factors[j])) == F2Poly(1));
    }
  }
}

TEST_CASE("F2Poly arithmetic") {
  const F2Poly a = f2("x^3+x+1"), b = f2("x^3+x^2+1");
  auto [q, r] = divmod(a * b, b);
  CHECK(q == a);
  CHECK(r.is_zero());
  CHECK(gcd(a, b) == F2Poly(1));
  CHECK(to_string(a) == "x^3+x+1");
  CHECK_THROWS_AS(divmod(a, F2Poly{}), Error);
  CHECK_THROWS_AS(F2Poly(std::uint64_t{1} << 40) * F2Poly(std::uint64_t{1} << 40), Error);
}
