#pragma once

// Cyclic and lambda-constacyclic codes over R, their Gray images, and the
// bridges between the R-side and Z4-side descriptions.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "z4u/factor.hpp"
#include "z4u/maps.hpp"
#include "z4u/poly.hpp"
#include "z4u/z4code.hpp"

namespace z4u {

/// An R[x]-submodule of R[x]/<x^n - lambda> given by generators of degree < n.
/// As a Z4-module it is spanned by x^i g and u x^i g for i < n.
class RCode {
 public:
  /// Throws DegreeTooHigh if some generator has degree >= n.
  RCode(QuotientCtx ctx, std::vector<RPoly> generators);

  const QuotientCtx& ctx() const { return ctx_; }
  std::size_t n() const { return ctx_.n(); }
  const std::vector<RPoly>& generators() const { return gens_; }

  /// Coefficient vectors of x^i g and u x^i g (reduced), for every generator.
  std::vector<RVector> spanning_vectors() const;

 private:
  QuotientCtx ctx_;
  std::vector<RPoly> gens_;
};

/// Assignment of the factors of x^n - 1 (by index into the factorization)
/// to the three groups a, b, c of the generator a(x)(b(x)+2).
struct FactorSplit {
  std::vector<std::size_t> a, b, c;
};

/// Explicit monic factors with a b c = x^n - 1, pairwise coprime mod 2.
struct GeneratorTriple {
  Z4Poly a, b, c;
};

/// a(x) * (b(x) + 2) over Z4.
Z4Poly split_generator(const GeneratorTriple& t);

/// Resolves a split against the factorization of x^n - 1. Throws BadPartition
/// unless a, b, c are disjoint and cover every factor index.
GeneratorTriple resolve_split(const Z4Factorization& f, const FactorSplit& s);

/// Throws BadPartition if the product is not x^n - 1, a factor is not monic,
/// or two factors share a root mod 2.
void check_triple(std::size_t n, const GeneratorTriple& t);

/// <a1(b1+2), u a2(b2+2)> in R[x]/<x^n - 1>. Throws EvenLength for even n.
RCode build_cyclic_code(std::size_t n, const FactorSplit& s1, const FactorSplit& s2);
RCode build_cyclic_code(std::size_t n, const GeneratorTriple& t1, const GeneratorTriple& t2);

/// The cyclic construction with every generator passed through the twist
/// x -> lambda x, placed in R[x]/<x^n - lambda>. lambda must square to 1.
RCode build_constacyclic_code(std::size_t n, const FactorSplit& s1, const FactorSplit& s2,
                              RElem lambda = kOnePlus2u);
RCode build_constacyclic_code(std::size_t n, const GeneratorTriple& t1, const GeneratorTriple& t2,
                              RElem lambda = kOnePlus2u);

/// Carries a cyclic code of odd length to the lambda-constacyclic side via the
/// twist. Throws EvenLength, TwistUndefined, or Error if `cyclic` is not in
/// a lambda = 1 context.
RCode to_constacyclic(const RCode& cyclic, RElem lambda = kOnePlus2u);

/// Throws DegreeTooHigh.
RCode code_from_generators(const QuotientCtx& ctx, std::vector<RPoly> gens);

/// <g1, u g2>, the shape used by the length-7 table and the examples.
RCode code_from_pair(const QuotientCtx& ctx, const RPoly& g1, const RPoly& g2);

/// Z4 code of length 2n spanned by the Gray images of spanning_vectors().
Z4Code gray_image(const RCode& code);

/// Standard form of the code under the interleaved embedding
/// (a_0, b_0, a_1, b_1, ...), which is bijective on R^n.
Z4StandardForm r_standard_form(const RCode& code);

/// Membership of an R-vector in the code. Throws LengthMismatch.
bool contains(const RCode& code, const RVector& v);

/// Invariance under tau(., lambda); lambda = 1 is the cyclic shift.
bool is_shift_invariant(const RCode& code, RElem lambda);

/// Sizes of C and of its Gray image, as (k1, k2) pairs.
struct GrayKernelReport {
  std::size_t r_k1 = 0, r_k2 = 0;
  std::size_t gray_k1 = 0, gray_k2 = 0;

  std::size_t r_log2() const { return 2 * r_k1 + r_k2; }
  std::size_t gray_log2() const { return 2 * gray_k1 + gray_k2; }
  /// log2 |C intersect ker(phi)|.
  std::size_t kernel_log2() const { return r_log2() - gray_log2(); }
};
GrayKernelReport gray_kernel_report(const RCode& code);

/// For C = <a + u b> of length n: b + x^n (2a + b) and a + x^n a.
/// Throws DegreeTooHigh if deg a or deg b >= n.
std::pair<Z4Poly, Z4Poly> gray_poly_generators(const Z4Poly& a, const Z4Poly& b, std::size_t n);

/// JSON record: n, lambda, generators ([a,b] pairs ascending), z4_length,
/// k1, k2 and, when known, min_lee_distance.
std::string to_json(const RCode& code, const Z4Code& image);

struct CodeRecord {
  RCode code;
  std::size_t z4_length = 0;
  std::size_t k1 = 0, k2 = 0;
  std::optional<unsigned> min_lee_distance;
};
/// Throws ParseError on malformed JSON or a missing field.
CodeRecord code_from_json(std::string_view text);

}  // namespace z4u
