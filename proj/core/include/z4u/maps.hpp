#pragma once

// Vector-level maps on R^n and Z4^m: Gray map, cyclic and constacyclic
// shifts, coordinate twist, Lee weight and distance.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "z4u/errors.hpp"
#include "z4u/poly.hpp"
#include "z4u/ring.hpp"

namespace z4u {

using RVector = std::vector<RElem>;
using Z4Vector = std::vector<Z4>;

/// (a_i + u b_i)_i -> (b_0..b_{n-1}, 2a_0+b_0 .. 2a_{n-1}+b_{n-1}).
Z4Vector phi(const RVector& v);

/// Right cyclic rotation by one. Throws EmptyVector on empty input.
template <class T>
std::vector<T> sigma(const std::vector<T>& v) {
  if (v.empty()) throw EmptyVector("sigma: empty vector");
  std::vector<T> out(v);
  std::rotate(out.rbegin(), out.rbegin() + 1, out.rend());
  return out;
}

/// Rotate right by one and scale the wrapped coordinate by lambda.
/// Throws NonUnit unless lambda is a unit.
RVector tau(const RVector& v, RElem lambda);

/// Coordinate i scaled by lambda^i. Throws TwistUndefined unless lambda^2 == 1.
RVector mu_bar(const RVector& v, RElem lambda);

unsigned lee_weight(const RVector& v);
unsigned lee_weight(const Z4Vector& v);
/// Throws LengthMismatch on unequal lengths.
unsigned lee_distance(const RVector& x, const RVector& y);
unsigned lee_distance(const Z4Vector& x, const Z4Vector& y);

RVector add(const RVector& x, const RVector& y);
Z4Vector add(const Z4Vector& x, const Z4Vector& y);

/// Coefficients of f padded to length n (f must have degree < n).
RVector coeff_vector(const RPoly& f, std::size_t n);
RPoly from_vector(const RVector& v);

std::string to_string(const RVector& v);
std::string to_string(const Z4Vector& v);

}  // namespace z4u
