#include "z4u/codes.hpp"

#include <algorithm>

#include "json.hpp"

namespace z4u {

RCode::RCode(QuotientCtx ctx, std::vector<RPoly> generators) : ctx_(ctx), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.degree() >= static_cast<long>(ctx_.n())) {
      throw DegreeTooHigh("RCode: generator " + format_poly(g) + " has degree >= n = " + std::to_string(ctx_.n()));
    }
  }
}

std::vector<RVector> RCode::spanning_vectors() const {
  const std::size_t n = ctx_.n();
  std::vector<RVector> out;
  out.reserve(2 * n * gens_.size());
  for (const auto& g : gens_) {
    RVector v = g.padded(n);
    for (std::size_t i = 0; i < n; ++i) {
      RVector uv(v);
      for (auto& x : uv) x *= kU;
      out.push_back(v);
      out.push_back(std::move(uv));
      // x * c(x) mod (x^n - lambda) is the constacyclic shift.
      v = tau(v, ctx_.lambda());
    }
  }
  return out;
}

Z4Poly split_generator(const GeneratorTriple& t) { return t.a * (t.b + Z4Poly{Z4(2)}); }

GeneratorTriple resolve_split(const Z4Factorization& f, const FactorSplit& s) {
  std::vector<int> seen(f.factors.size(), 0);
  GeneratorTriple t{Z4Poly{Z4(1)}, Z4Poly{Z4(1)}, Z4Poly{Z4(1)}};
  auto take = [&](const std::vector<std::size_t>& idx, Z4Poly& into) {
    for (std::size_t i : idx) {
      if (i >= f.factors.size()) throw BadPartition("factor index " + std::to_string(i) + " out of range");
      if (seen[i]++) throw BadPartition("factor index " + std::to_string(i) + " used twice");
      into *= f.factors[i];
    }
  };
  take(s.a, t.a);
  take(s.b, t.b);
  take(s.c, t.c);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw BadPartition("split does not cover every factor of x^" + std::to_string(f.n) + "-1");
  }
  return t;
}

void check_triple(std::size_t n, const GeneratorTriple& t) {
  for (const Z4Poly* p : {&t.a, &t.b, &t.c}) {
    if (p->is_zero() || p->leading() != Z4(1)) throw BadPartition("triple factor " + format_poly(*p) + " is not monic");
  }
  if (t.a * t.b * t.c != x_n_minus_one<Z4>(n)) {
    throw BadPartition("triple product is not x^" + std::to_string(n) + "-1");
  }
  const F2Poly a = reduce_mod2(t.a), b = reduce_mod2(t.b), c = reduce_mod2(t.c);
  if (gcd(a, b) != F2Poly(1) || gcd(a, c) != F2Poly(1) || gcd(b, c) != F2Poly(1)) {
    throw BadPartition("triple factors are not pairwise coprime");
  }
}

namespace {

RCode cyclic_from_triples(std::size_t n, const GeneratorTriple& t1, const GeneratorTriple& t2) {
  if (n % 2 == 0) throw EvenLength("n must be odd");
  check_triple(n, t1);
  check_triple(n, t2);
  const QuotientCtx ctx(n, RElem(1));
  return RCode(ctx, {ctx.reduce(embed(split_generator(t1))), ctx.reduce(u_times(split_generator(t2)))});
}

}  // namespace

RCode build_cyclic_code(std::size_t n, const FactorSplit& s1, const FactorSplit& s2) {
  if (n % 2 == 0) throw EvenLength("n must be odd");
  const Z4Factorization f = factor_xn_minus_1_z4(n);
  return cyclic_from_triples(n, resolve_split(f, s1), resolve_split(f, s2));
}

RCode build_cyclic_code(std::size_t n, const GeneratorTriple& t1, const GeneratorTriple& t2) {
  return cyclic_from_triples(n, t1, t2);
}

RCode build_constacyclic_code(std::size_t n, const FactorSplit& s1, const FactorSplit& s2, RElem lambda) {
  return to_constacyclic(build_cyclic_code(n, s1, s2), lambda);
}

RCode build_constacyclic_code(std::size_t n, const GeneratorTriple& t1, const GeneratorTriple& t2, RElem lambda) {
  return to_constacyclic(build_cyclic_code(n, t1, t2), lambda);
}

RCode to_constacyclic(const RCode& cyclic, RElem lambda) {
  if (cyclic.ctx().lambda() != RElem(1)) throw Error("to_constacyclic: input must be a cyclic code");
  if (cyclic.n() % 2 == 0) throw EvenLength("to_constacyclic: n must be odd");
  std::vector<RPoly> gens;
  for (const auto& g : cyclic.generators()) gens.push_back(twist(g, lambda));
  return RCode(QuotientCtx(cyclic.n(), lambda), std::move(gens));
}

RCode code_from_generators(const QuotientCtx& ctx, std::vector<RPoly> gens) { return RCode(ctx, std::move(gens)); }

RCode code_from_pair(const QuotientCtx& ctx, const RPoly& g1, const RPoly& g2) {
  return RCode(ctx, {g1, kU * g2});
}

Z4Code gray_image(const RCode& code) {
  std::vector<Z4Vector> rows;
  for (const auto& v : code.spanning_vectors()) rows.push_back(phi(v));
  return Z4Code(2 * code.n(), std::move(rows));
}

namespace {

Z4Vector interleave(const RVector& v) {
  Z4Vector out;
  out.reserve(2 * v.size());
  for (RElem x : v) {
    out.push_back(x.a);
    out.push_back(x.b);
  }
  return out;
}

}  // namespace

Z4StandardForm r_standard_form(const RCode& code) {
  std::vector<Z4Vector> rows;
  for (const auto& v : code.spanning_vectors()) rows.push_back(interleave(v));
  return standard_form_z4(rows, 2 * code.n());
}

bool contains(const RCode& code, const RVector& v) {
  if (v.size() != code.n()) throw LengthMismatch("contains: vector length differs from n");
  return r_standard_form(code).contains(interleave(v));
}

bool is_shift_invariant(const RCode& code, RElem lambda) {
  const Z4StandardForm form = r_standard_form(code);
  for (const auto& v : code.spanning_vectors()) {
    if (!form.contains(interleave(tau(v, lambda)))) return false;
  }
  return true;
}

GrayKernelReport gray_kernel_report(const RCode& code) {
  const Z4StandardForm rf = r_standard_form(code);
  const Z4Code image = gray_image(code);
  return {rf.k1(), rf.k2(), image.k1(), image.k2()};
}

std::pair<Z4Poly, Z4Poly> gray_poly_generators(const Z4Poly& a, const Z4Poly& b, std::size_t n) {
  const auto bound = static_cast<long>(n);
  if (a.degree() >= bound || b.degree() >= bound) throw DegreeTooHigh("gray_poly_generators: degree >= n");
  Z4Poly first = b + (Z4(2) * a + b).shifted(n);
  Z4Poly second = a + a.shifted(n);
  return {std::move(first), std::move(second)};
}

namespace {

nlohmann::json pair_of(RElem x) { return nlohmann::json::array({x.a.value(), x.b.value()}); }

RElem elem_of(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [a, b] pair", 0);
  return RElem(j[0].get<int>(), j[1].get<int>());
}

}  // namespace

std::string to_json(const RCode& code, const Z4Code& image) {
  nlohmann::json j;
  j["n"] = code.n();
  j["lambda"] = pair_of(code.ctx().lambda());
  auto gens = nlohmann::json::array();
  for (const auto& g : code.generators()) {
    auto coeffs = nlohmann::json::array();
    for (RElem c : g.coeffs()) coeffs.push_back(pair_of(c));
    gens.push_back(std::move(coeffs));
  }
  j["generators"] = std::move(gens);
  j["z4_length"] = image.length();
  j["k1"] = image.k1();
  j["k2"] = image.k2();
  if (image.min_lee()) j["min_lee_distance"] = *image.min_lee();
  return j.dump();
}

CodeRecord code_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<RPoly> gens;
    for (const auto& g : j.at("generators")) {
      std::vector<RElem> coeffs;
      for (const auto& c : g) coeffs.push_back(elem_of(c));
      gens.emplace_back(std::move(coeffs));
    }
    CodeRecord rec{RCode(QuotientCtx(j.at("n").get<std::size_t>(), elem_of(j.at("lambda"))), std::move(gens)),
                   j.at("z4_length").get<std::size_t>(), j.at("k1").get<std::size_t>(), j.at("k2").get<std::size_t>(),
                   std::nullopt};
    if (j.contains("min_lee_distance")) rec.min_lee_distance = j["min_lee_distance"].get<unsigned>();
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid code JSON: ") + e.what(), 0);
  }
}

}  // namespace z4u
