#include "z4u/z4code.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>

namespace z4u {

std::vector<std::size_t> Z4StandardForm::col_perm() const {
  std::vector<std::size_t> perm(unit_pivots);
  perm.insert(perm.end(), two_pivots.begin(), two_pivots.end());
  std::vector<bool> seen(length, false);
  for (std::size_t c : perm) seen[c] = true;
  for (std::size_t c = 0; c < length; ++c) {
    if (!seen[c]) perm.push_back(c);
  }
  return perm;
}

std::vector<Z4Vector> Z4StandardForm::reduced_rows() const {
  std::vector<Z4Vector> rows(unit_rows);
  rows.insert(rows.end(), two_rows.begin(), two_rows.end());
  return rows;
}

namespace {

void axpy(Z4Vector& dst, Z4 c, const Z4Vector& row) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= c * row[i];
}

/// Reduces `scratch` (already holding the candidate) to zero iff it lies in
/// the span.
bool reduces_to_zero(const Z4StandardForm& f, Z4Vector& scratch) {
  for (std::size_t i = 0; i < f.unit_rows.size(); ++i) {
    const Z4 c = scratch[f.unit_pivots[i]];
    if (!c.is_zero()) axpy(scratch, c, f.unit_rows[i]);
  }
  for (std::size_t j = 0; j < f.two_rows.size(); ++j) {
    const Z4 c = scratch[f.two_pivots[j]];
    if (c.is_unit()) return false;
    if (!c.is_zero()) axpy(scratch, Z4(1), f.two_rows[j]);
  }
  return std::all_of(scratch.begin(), scratch.end(), [](Z4 x) { return x.is_zero(); });
}

}  // namespace

bool Z4StandardForm::contains(const Z4Vector& v) const {
  if (v.size() != length) throw LengthMismatch("contains: vector length differs from code length");
  Z4Vector scratch(v);
  return reduces_to_zero(*this, scratch);
}

Z4StandardForm standard_form_z4(std::span<const Z4Vector> input, std::size_t length) {
  std::vector<Z4Vector> rows(input.begin(), input.end());
  for (const auto& r : rows) {
    if (r.size() != length) throw LengthMismatch("standard_form_z4: row length differs");
  }
  Z4StandardForm out;
  out.length = length;
  std::vector<bool> used(rows.size(), false);
  std::vector<std::size_t> unit_idx, two_idx;
  std::vector<bool> unit_col(length, false);

  for (std::size_t c = 0; c < length; ++c) {
    std::size_t p = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!used[r] && rows[r][c].is_unit()) {
        p = r;
        break;
      }
    }
    if (p == rows.size()) continue;
    used[p] = true;
    // Units of Z4 are self-inverse.
    const Z4 inv = rows[p][c];
    for (auto& x : rows[p]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != p && !rows[r][c].is_zero()) axpy(rows[r], rows[r][c], rows[p]);
    }
    unit_idx.push_back(p);
    out.unit_pivots.push_back(c);
    unit_col[c] = true;
  }

  // Every unused row is now even in every column.
  for (std::size_t c = 0; c < length; ++c) {
    if (unit_col[c]) continue;
    std::size_t p = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!used[r] && rows[r][c] == Z4(2)) {
        p = r;
        break;
      }
    }
    if (p == rows.size()) continue;
    used[p] = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      // Clears 2s in other 2-rows and brings unit-row entries into {0,1}.
      if (r != p && rows[r][c].value() >= 2) axpy(rows[r], Z4(1), rows[p]);
    }
    two_idx.push_back(p);
    out.two_pivots.push_back(c);
  }

  for (std::size_t r : unit_idx) out.unit_rows.push_back(std::move(rows[r]));
  for (std::size_t r : two_idx) out.two_rows.push_back(std::move(rows[r]));
  return out;
}

Z4Code::Z4Code(std::size_t length, std::vector<Z4Vector> gen_matrix)
    : length_(length), gen_(std::move(gen_matrix)), form_(standard_form_z4(gen_, length)) {}

Z4Code Z4Code::with_min_lee(unsigned d) const {
  Z4Code c(*this);
  c.min_lee_ = d;
  return c;
}

bool membership(const Z4Code& code, const Z4Vector& v) { return code.form().contains(v); }

bool is_shift_invariant(const Z4Code& code) {
  for (const auto& row : code.form().reduced_rows()) {
    if (!code.form().contains(sigma(row))) return false;
  }
  return true;
}

bool same_code(const Z4Code& x, const Z4Code& y) {
  if (x.length() != y.length() || x.k1() != y.k1() || x.k2() != y.k2()) return false;
  for (const auto& row : y.form().reduced_rows()) {
    if (!x.form().contains(row)) return false;
  }
  return true;
}

namespace {

/// Codewords enumerated as binary combinations of the generators
/// r_1..r_k1, 2r_1..2r_k1, s_1..s_k2 in reflected Gray-code order, so each
/// step adds or subtracts one generator. Vectors are bit-sliced: bit i of
/// `lo`/`hi` holds the low/high bit of coordinate i.
class Enumerator {
 public:
  explicit Enumerator(const Z4StandardForm& f) : words_((f.length + 63) / 64) {
    for (const auto& r : f.unit_rows) push(r);
    for (const auto& r : f.unit_rows) {
      Z4Vector twice(r);
      for (auto& x : twice) x *= Z4(2);
      push(twice);
    }
    for (const auto& r : f.two_rows) push(r);
  }

  std::size_t generators() const { return count_; }

  /// Calls visit(weight) for every index t in [begin, end) except t == 0;
  /// stops early when visit returns false.
  template <class Visit>
  void run(std::uint64_t begin, std::uint64_t end, Visit&& visit) const {
    std::vector<std::uint64_t> lo(words_, 0), hi(words_, 0);
    if (begin >= end) return;
    const std::uint64_t g0 = begin ^ (begin >> 1);
    for (std::uint64_t b = g0; b != 0; b &= b - 1) add(lo, hi, static_cast<std::size_t>(std::countr_zero(b)), false);
    if (begin != 0 && !visit(weight(lo, hi))) return;
    for (std::uint64_t t = begin + 1; t < end; ++t) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(t));
      const bool now_set = (((t ^ (t >> 1)) >> bit) & 1u) != 0;
      add(lo, hi, bit, !now_set);
      if (!visit(weight(lo, hi))) return;
    }
  }

 private:
  void push(const Z4Vector& v) {
    const std::size_t base = gen_lo_.size();
    gen_lo_.resize(base + words_, 0);
    gen_hi_.resize(base + words_, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << (i % 64);
      if (v[i].value() & 1u) gen_lo_[base + i / 64] |= bit;
      if (v[i].value() & 2u) gen_hi_[base + i / 64] |= bit;
    }
    ++count_;
  }

  void add(std::vector<std::uint64_t>& lo, std::vector<std::uint64_t>& hi, std::size_t g, bool negate) const {
    const std::size_t base = g * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t blo = gen_lo_[base + w];
      // -x flips the high bit exactly where the low bit is set.
      const std::uint64_t bhi = negate ? gen_hi_[base + w] ^ blo : gen_hi_[base + w];
      const std::uint64_t carry = lo[w] & blo;
      lo[w] ^= blo;
      hi[w] ^= bhi ^ carry;
    }
  }

  unsigned weight(const std::vector<std::uint64_t>& lo, const std::vector<std::uint64_t>& hi) const {
    unsigned w = 0;
    for (std::size_t i = 0; i < words_; ++i) {
      w += static_cast<unsigned>(std::popcount(lo[i]) + 2 * std::popcount(hi[i] & ~lo[i]));
    }
    return w;
  }

  std::size_t words_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> gen_lo_, gen_hi_;
};

unsigned pick_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs `work(begin, end)` over [0, total) split into chunks. The caller's
/// combination of per-chunk results must not depend on chunk boundaries.
template <class Work>
void parallel_chunks(std::uint64_t total, unsigned threads, const std::function<void(double)>& progress,
                     Work&& work) {
  constexpr std::uint64_t kSerialBelow = 1u << 14;
  if (total <= kSerialBelow || threads == 1) {
    work(0, total);
    if (progress) progress(1.0);
    return;
  }
  const std::uint64_t chunks = std::min<std::uint64_t>(total / 1024, std::uint64_t{threads} * 16);
  const std::uint64_t size = (total + chunks - 1) / chunks;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mu;
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t b = c * size;
      const std::uint64_t e = std::min(total, b + size);
      if (b < e) work(b, e);
      const std::uint64_t d = ++done;
      if (progress) {
        std::lock_guard lock(progress_mu);
        progress(static_cast<double>(d) / static_cast<double>(chunks));
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

bool sweep_rec(const Z4StandardForm& f, Z4Vector& v, Z4Vector& scratch, std::size_t from, unsigned remaining) {
  if (remaining == 0) {
    scratch = v;
    return reduces_to_zero(f, scratch);
  }
  for (std::size_t p = from; p < v.size(); ++p) {
    for (int value : {1, 3, 2}) {
      const unsigned cost = value == 2 ? 2u : 1u;
      if (cost > remaining) continue;
      v[p] = Z4(value);
      const bool hit = sweep_rec(f, v, scratch, p + 1, remaining - cost);
      v[p] = Z4(0);
      if (hit) return true;
    }
  }
  return false;
}

std::uint64_t codeword_count(std::size_t log2) {
  return log2 >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << log2);
}

}  // namespace

std::optional<unsigned> low_weight_sweep(const Z4StandardForm& form, unsigned max_weight) {
  Z4Vector v(form.length);
  Z4Vector scratch(form.length);
  for (unsigned w = 1; w <= max_weight; ++w) {
    if (sweep_rec(form, v, scratch, 0, w)) return w;
  }
  return std::nullopt;
}

unsigned min_lee_distance(const Z4Code& code, const DistanceOptions& opts) {
  if (code.is_zero()) throw ZeroCode("min_lee_distance: the zero code has no nonzero codeword");
  const std::size_t m = code.log2_size();
  const std::uint64_t count = codeword_count(m);
  if (count > opts.sweep_threshold) {
    if (auto d = low_weight_sweep(code.form(), opts.sweep_weight)) return *d;
  }
  if (m >= 64) throw TooLarge("min_lee_distance: 2^" + std::to_string(m) + " codewords cannot be enumerated");
  if (count > opts.budget && !opts.force) {
    throw BudgetExceeded("min_lee_distance: " + std::to_string(count) + " codewords exceed the budget of " +
                         std::to_string(opts.budget) + "; pass force to enumerate anyway");
  }

  const Enumerator en(code.form());
  std::atomic<unsigned> best{std::numeric_limits<unsigned>::max()};
  parallel_chunks(count, pick_threads(opts.threads), opts.progress, [&](std::uint64_t b, std::uint64_t e) {
    unsigned local = best.load(std::memory_order_relaxed);
    if (local == 1) return;
    std::uint64_t steps = 0;
    en.run(b, e, [&](unsigned w) {
      if (w < local) local = w;
      if ((++steps & 0xfff) == 0 && best.load(std::memory_order_relaxed) == 1) return false;
      return local != 1;
    });
    unsigned cur = best.load();
    while (local < cur && !best.compare_exchange_weak(cur, local)) {
    }
  });
  return best.load();
}

std::map<unsigned, std::uint64_t> lee_weight_enumerator(const Z4Code& code, std::uint64_t max_codewords,
                                                        unsigned threads) {
  const std::size_t m = code.log2_size();
  const std::uint64_t count = codeword_count(m);
  if (m >= 64 || count > max_codewords) {
    throw TooLarge("lee_weight_enumerator: 2^" + std::to_string(m) + " codewords exceed the limit");
  }
  const Enumerator en(code.form());
  const std::size_t max_weight = 2 * code.length();
  std::vector<std::uint64_t> total(max_weight + 1, 0);
  std::mutex mu;
  parallel_chunks(count, pick_threads(threads), {}, [&](std::uint64_t b, std::uint64_t e) {
    std::vector<std::uint64_t> local(max_weight + 1, 0);
    en.run(b, e, [&](unsigned w) {
      ++local[w];
      return true;
    });
    std::lock_guard lock(mu);
    for (std::size_t w = 0; w <= max_weight; ++w) total[w] += local[w];
  });
  total[0] += 1;  // the zero codeword, index 0
  std::map<unsigned, std::uint64_t> out;
  for (std::size_t w = 0; w <= max_weight; ++w) {
    if (total[w] != 0) out.emplace(static_cast<unsigned>(w), total[w]);
  }
  return out;
}

Z4Code z4_cyclic_code(const std::vector<Z4Poly>& gens, std::size_t length) {
  if (length == 0) throw Error("z4_cyclic_code: length must be positive");
  std::vector<Z4Vector> rows;
  for (const auto& g : gens) {
    Z4Vector base(length);
    for (std::size_t i = 0; i < g.size(); ++i) base[i % length] += g[i];
    for (std::size_t s = 0; s < length; ++s) {
      rows.push_back(base);
      base = sigma(base);
    }
  }
  return Z4Code(length, std::move(rows));
}

std::string format_parameters(std::size_t length, std::size_t k1, std::size_t k2, std::optional<unsigned> d) {
  std::string out = "[" + std::to_string(length) + ", 4^" + std::to_string(k1) + " 2^" + std::to_string(k2);
  if (d) out += ", " + std::to_string(*d);
  return out + "]";
}

std::string format_parameters(const Z4Code& code) {
  return format_parameters(code.length(), code.k1(), code.k2(), code.min_lee());
}

}  // namespace z4u
