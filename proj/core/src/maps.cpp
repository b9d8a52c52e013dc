#include "z4u/maps.hpp"

namespace z4u {

Z4Vector phi(const RVector& v) {
  const std::size_t n = v.size();
  Z4Vector out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [first, second] = gray(v[i]);
    out[i] = first;
    out[n + i] = second;
  }
  return out;
}

RVector tau(const RVector& v, RElem lambda) {
  if (!lambda.is_unit()) throw NonUnit("tau: lambda = " + to_string(lambda) + " is not a unit");
  RVector out = sigma(v);
  out.front() *= lambda;
  return out;
}

RVector mu_bar(const RVector& v, RElem lambda) {
  if (lambda * lambda != RElem(1)) {
    throw TwistUndefined("mu_bar: lambda = " + to_string(lambda) + " does not square to 1");
  }
  RVector out(v);
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] *= lambda;
  return out;
}

unsigned lee_weight(const RVector& v) {
  unsigned w = 0;
  for (RElem x : v) w += lee_weight(x);
  return w;
}

unsigned lee_weight(const Z4Vector& v) {
  unsigned w = 0;
  for (Z4 x : v) w += lee_weight(x);
  return w;
}

namespace {

template <class T>
std::vector<T> sub(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != y.size()) throw LengthMismatch("vector lengths differ");
  std::vector<T> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return d;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + "]";
}

}  // namespace

unsigned lee_distance(const RVector& x, const RVector& y) { return lee_weight(sub(x, y)); }
unsigned lee_distance(const Z4Vector& x, const Z4Vector& y) { return lee_weight(sub(x, y)); }

RVector add(const RVector& x, const RVector& y) {
  if (x.size() != y.size()) throw LengthMismatch("vector lengths differ");
  RVector s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  return s;
}

Z4Vector add(const Z4Vector& x, const Z4Vector& y) {
  if (x.size() != y.size()) throw LengthMismatch("vector lengths differ");
  Z4Vector s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  return s;
}

RVector coeff_vector(const RPoly& f, std::size_t n) {
  if (f.degree() >= static_cast<long>(n)) throw DegreeTooHigh("coeff_vector: degree >= n");
  return f.padded(n);
}

RPoly from_vector(const RVector& v) { return RPoly(v); }

std::string to_string(const RVector& v) { return join(v); }
std::string to_string(const Z4Vector& v) { return join(v); }

}  // namespace z4u
