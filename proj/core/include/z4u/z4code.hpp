#pragma once

// Z4-linear codes: standard form, membership, exact minimum Lee distance and
// Lee weight enumerators.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "z4u/maps.hpp"

namespace z4u {

/// Row-reduced generator matrix of a Z4-module.
///
/// `unit_rows[i]` has a 1 at column `unit_pivots[i]`; every other row is 0 in
/// that column. `two_rows[j]` has entries in {0,2}, a 2 at column
/// `two_pivots[j]`, and every other row has 0 or 1 in that column. The module
/// is { sum c_i unit_rows[i] + sum d_j two_rows[j] : c_i in Z4, d_j in {0,1} },
/// with each element represented exactly once, so its size is 4^k1 2^k2.
struct Z4StandardForm {
  std::size_t length = 0;
  std::vector<Z4Vector> unit_rows;
  std::vector<Z4Vector> two_rows;
  std::vector<std::size_t> unit_pivots;
  std::vector<std::size_t> two_pivots;

  std::size_t k1() const { return unit_rows.size(); }
  std::size_t k2() const { return two_rows.size(); }
  /// log2 of the number of codewords, 2*k1 + k2.
  std::size_t log2_size() const { return 2 * k1() + k2(); }
  /// Unit pivot columns, then 2-pivot columns, then the rest ascending.
  std::vector<std::size_t> col_perm() const;
  /// Unit rows followed by 2-rows.
  std::vector<Z4Vector> reduced_rows() const;
  /// Throws LengthMismatch when v has the wrong length.
  bool contains(const Z4Vector& v) const;
};

/// Pivot policy: columns scanned left to right, first for unit pivots, then
/// for 2-pivots; the lowest-index eligible row wins. Throws LengthMismatch if
/// a row's length differs from `length`.
Z4StandardForm standard_form_z4(std::span<const Z4Vector> rows, std::size_t length);

class Z4Code {
 public:
  Z4Code(std::size_t length, std::vector<Z4Vector> gen_matrix);

  std::size_t length() const { return length_; }
  const std::vector<Z4Vector>& gen_matrix() const { return gen_; }
  const Z4StandardForm& form() const { return form_; }
  std::size_t k1() const { return form_.k1(); }
  std::size_t k2() const { return form_.k2(); }
  std::size_t log2_size() const { return form_.log2_size(); }
  bool is_zero() const { return log2_size() == 0; }
  const std::optional<unsigned>& min_lee() const { return min_lee_; }

  /// Copy carrying a known minimum Lee distance.
  Z4Code with_min_lee(unsigned d) const;

 private:
  std::size_t length_;
  std::vector<Z4Vector> gen_;
  Z4StandardForm form_;
  std::optional<unsigned> min_lee_;
};

/// Throws LengthMismatch.
bool membership(const Z4Code& code, const Z4Vector& v);

/// Cyclic-shift invariance, checked on a spanning set.
bool is_shift_invariant(const Z4Code& code);

/// True iff both codes have the same length and the same row span.
bool same_code(const Z4Code& x, const Z4Code& y);

struct DistanceOptions {
  /// Largest number of codewords full enumeration may visit.
  std::uint64_t budget = std::uint64_t{1} << 28;
  /// Enumerate past the budget instead of throwing BudgetExceeded.
  bool force = false;
  /// Worker threads for enumeration; 0 picks hardware concurrency.
  unsigned threads = 0;
  /// Codes with more codewords than this run the low-weight sweep first.
  std::uint64_t sweep_threshold = std::uint64_t{1} << 16;
  /// Largest Lee weight probed by the sweep.
  unsigned sweep_weight = 3;
  /// Called with the completed fraction of a full enumeration.
  std::function<void(double)> progress;
};

/// Smallest nonzero Lee weight in the code, computed exactly. Throws ZeroCode
/// for the zero code and BudgetExceeded as described in DistanceOptions.
unsigned min_lee_distance(const Z4Code& code, const DistanceOptions& opts = {});

/// Smallest Lee weight w <= max_weight of a nonzero codeword, found by testing
/// every vector of weight 1..max_weight for membership in ascending order.
std::optional<unsigned> low_weight_sweep(const Z4StandardForm& form, unsigned max_weight);

/// Weight -> number of codewords. Throws TooLarge above `max_codewords`.
std::map<unsigned, std::uint64_t> lee_weight_enumerator(const Z4Code& code,
                                                        std::uint64_t max_codewords = std::uint64_t{1} << 28,
                                                        unsigned threads = 0);

/// Cyclic code of the given length spanned by x^i g mod (x^length - 1).
Z4Code z4_cyclic_code(const std::vector<Z4Poly>& gens, std::size_t length);

/// "[N, 4^k1 2^k2, d]", or "[N, 4^k1 2^k2]" without a distance.
std::string format_parameters(std::size_t length, std::size_t k1, std::size_t k2, std::optional<unsigned> d);
std::string format_parameters(const Z4Code& code);

}  // namespace z4u
