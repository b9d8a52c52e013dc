#include "commands.hpp"

#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "reference_codes.hpp"
#include "z4u/codes.hpp"
#include "z4u/errors.hpp"
#include "z4u/factor.hpp"
#include "z4u/maps.hpp"

namespace z4u::cli {

namespace {

using Rng = std::mt19937_64;

RElem random_elem(Rng& rng) { return RElem(static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)); }

RVector random_vector(Rng& rng, std::size_t n) {
  RVector v(n);
  for (auto& x : v) x = random_elem(rng);
  return v;
}

RPoly random_poly(Rng& rng, std::size_t n) { return RPoly(random_vector(rng, n)); }

FactorSplit random_split(Rng& rng, std::size_t factors) {
  FactorSplit s;
  for (std::size_t i = 0; i < factors; ++i) {
    switch (rng() % 3) {
      case 0: s.a.push_back(i); break;
      case 1: s.b.push_back(i); break;
      default: s.c.push_back(i); break;
    }
  }
  return s;
}

std::string type_string(std::size_t k1, std::size_t k2) {
  return "4^" + std::to_string(k1) + " 2^" + std::to_string(k2);
}

DistanceOptions distance_options(const CommonFlags& flags) {
  DistanceOptions o;
  o.budget = flags.budget;
  o.force = flags.force;
  if (flags.progress) {
    o.progress = [](double f) { std::cerr << "\rdistance: " << static_cast<int>(f * 100) << "%" << std::flush; };
  }
  return o;
}

std::vector<std::size_t> odd_only(const std::vector<std::size_t>& ns, std::ostringstream& err) {
  std::vector<std::size_t> out;
  for (std::size_t n : ns) {
    if (n % 2 == 1) {
      out.push_back(n);
    } else {
      err << "skipping n = " << n << ": n must be odd\n";
    }
  }
  if (out.empty()) throw EvenLength("n must be odd");
  return out;
}

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;
};

void tally_line(std::ostringstream& out, const std::string& property, std::size_t n, const Tally& t) {
  out << property << '\t' << n << '\t' << t.checked << '\t' << t.failures;
  if (t.skipped) out << "\tskipped=" << t.skipped;
  out << '\n';
}

Tally verify_phi_tau_sigma(std::size_t n, std::uint64_t trials, Rng& rng, std::ostringstream& out) {
  Tally t;
  auto check = [&](const RVector& v) {
    ++t.checked;
    if (phi(tau(v, kOnePlus2u)) != sigma(phi(v))) {
      if (t.failures++ == 0) out << "counterexample\tn=" << n << '\t' << to_string(v) << '\n';
    }
  };
  if (n <= 3) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 16;
    const auto elems = all_elements();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      RVector v(n);
      std::uint64_t r = idx;
      for (auto& x : v) {
        x = elems[r % 16];
        r /= 16;
      }
      check(v);
    }
  } else {
    for (std::uint64_t i = 0; i < trials; ++i) check(random_vector(rng, n));
  }
  return t;
}

Tally verify_mu_isomorphism(std::size_t n, std::uint64_t trials, Rng& rng, std::ostringstream& out) {
  Tally t;
  const QuotientCtx cyclic(n, RElem(1));
  const QuotientCtx consta(n, kOnePlus2u);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const RPoly f = random_poly(rng, n);
    const RPoly g = random_poly(rng, n);
    ++t.checked;
    const bool involution = twist(twist(f, consta), consta) == f;
    const bool hom = twist(cyclic.mul_mod(f, g), consta) == consta.mul_mod(twist(f, consta), twist(g, consta));
    if (!involution || !hom) {
      if (t.failures++ == 0) out << "counterexample\tn=" << n << "\tf=" << format_poly(f) << "\tg=" << format_poly(g) << '\n';
    }
  }
  return t;
}

Tally verify_gray_cyclic(std::size_t n, std::uint64_t trials, Rng& rng, std::ostringstream& out) {
  Tally t;
  const std::size_t factors = factor_xn_minus_1_z4(n).factors.size();
  for (std::uint64_t i = 0; i < trials; ++i) {
    const FactorSplit s1 = random_split(rng, factors), s2 = random_split(rng, factors);
    const RCode code = build_constacyclic_code(n, s1, s2);
    ++t.checked;
    if (!is_shift_invariant(gray_image(code)) || !is_shift_invariant(code, kOnePlus2u)) {
      if (t.failures++ == 0) {
        out << "counterexample\tn=" << n << "\tg1=" << format_poly(code.generators()[0])
            << "\tg2=" << format_poly(code.generators()[1]) << '\n';
      }
    }
  }
  return t;
}

Tally verify_distance_transport(std::size_t n, std::uint64_t trials, Rng& rng, const CommonFlags& flags,
                                std::ostringstream& out) {
  Tally t;
  const std::size_t factors = factor_xn_minus_1_z4(n).factors.size();
  DistanceOptions opts = distance_options(flags);
  opts.progress = nullptr;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const RCode cyclic = build_cyclic_code(n, random_split(rng, factors), random_split(rng, factors));
    const RCode consta = to_constacyclic(cyclic);
    const Z4Code x = gray_image(cyclic), y = gray_image(consta);
    if (x.is_zero() || y.is_zero()) {
      ++t.skipped;
      continue;
    }
    try {
      const unsigned dx = min_lee_distance(x, opts);
      const unsigned dy = min_lee_distance(y, opts);
      ++t.checked;
      if (dx != dy) {
        if (t.failures++ == 0) {
          out << "counterexample\tn=" << n << "\tcyclic_d=" << dx << "\tconstacyclic_d=" << dy
              << "\tg1=" << format_poly(cyclic.generators()[0]) << "\tg2=" << format_poly(cyclic.generators()[1])
              << '\n';
        }
      }
    } catch (const BudgetExceeded&) {
      ++t.skipped;
    }
  }
  return t;
}

Tally verify_factor_product(std::size_t n, std::ostringstream& out) {
  Tally t;
  const Z4Factorization f = factor_xn_minus_1_z4(n);
  const std::vector<F2Poly> binary = factor_f2(n);
  ++t.checked;
  bool ok = f.product() == x_n_minus_one<Z4>(n) && f.factors.size() == binary.size();
  for (const auto& g : f.factors) {
    const F2Poly r = reduce_mod2(g);
    ok = ok && std::find(binary.begin(), binary.end(), r) != binary.end() && graeffe_lift(r) == g;
  }
  if (!ok) {
    ++t.failures;
    out << "counterexample\tn=" << n << '\n';
  }
  return t;
}

/// Counts codewords of the form (2s, 0) by testing all 2^n choices of s.
std::uint64_t count_kernel_members(const RCode& code) {
  const Z4StandardForm form = r_standard_form(code);
  const std::size_t n = code.n();
  std::uint64_t count = 0;
  Z4Vector v(2 * n);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    for (std::size_t i = 0; i < n; ++i) v[2 * i] = ((s >> i) & 1u) ? 2 : 0;
    if (form.contains(v)) ++count;
  }
  return count;
}

Tally verify_gray_kernel(std::size_t n, std::uint64_t trials, Rng& rng, std::ostringstream& out) {
  Tally t;
  RVector witness(n);
  witness[0] = RElem(2);
  out << "kernel_witness\t" << to_string(witness) << "\t->\t" << to_string(phi(witness)) << '\n';
  ++t.checked;
  if (lee_weight(phi(witness)) != 0) ++t.failures;

  const QuotientCtx ctx(n, kOnePlus2u);
  auto check = [&](const RCode& code, const std::string& label) {
    const GrayKernelReport rep = gray_kernel_report(code);
    ++t.checked;
    bool ok = rep.r_log2() >= rep.gray_log2();
    if (n <= 12) ok = ok && count_kernel_members(code) == (std::uint64_t{1} << rep.kernel_log2());
    if (!label.empty()) {
      out << "code\t" << label << "\t|C|=" << type_string(rep.r_k1, rep.r_k2)
          << "\t|phi(C)|=" << type_string(rep.gray_k1, rep.gray_k2) << "\tkernel_log2=" << rep.kernel_log2() << '\n';
    }
    if (!ok) {
      if (t.failures++ == 0) out << "counterexample\tn=" << n << "\t" << label << '\n';
    }
  };
  check(RCode(ctx, {RPoly{RElem(1)}}), "<1>");
  for (std::uint64_t i = 0; i < trials; ++i) check(RCode(ctx, {random_poly(rng, n)}), "");
  return t;
}

std::string row_params(const Z4Code& image, std::optional<unsigned> d) {
  return format_parameters(image.length(), image.k1(), image.k2(), d);
}

template <class Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const BudgetExceeded& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const Error& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  auto to_size = [&](const std::string& s, std::size_t pos) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw ParseError("invalid length '" + s + "'", pos);
    return static_cast<std::size_t>(std::stoull(s));
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = to_size(text.substr(0, dots), 0);
    const std::size_t hi = to_size(text.substr(dots + 2), dots + 2);
    if (lo > hi) throw ParseError("empty range", dots);
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(to_size(text.substr(start, comma - start), start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

CommandResult cmd_factor(std::size_t n, const CommonFlags& flags) {
  return guarded([&] {
    if (n % 2 == 0) throw EvenLength("n must be odd");
    const Z4Factorization f = factor_xn_minus_1_z4(n);
    CommandResult r;
    if (flags.json) {
      nlohmann::json j;
      j["n"] = n;
      j["factors"] = nlohmann::json::array();
      for (const auto& g : f.factors) j["factors"].push_back(format_poly(g));
      r.out = j.dump() + "\n";
    } else {
      for (const auto& g : f.factors) r.out += format_poly(g) + "\n";
    }
    return r;
  });
}

CommandResult cmd_code_info(const CodeArgs& args, const CommonFlags& flags) {
  return guarded([&] {
    const QuotientCtx ctx(args.n, parse_relem(args.lambda));
    std::vector<RPoly> gens;
    if (args.g1 || args.g2) {
      gens.push_back(parse_rpoly(args.g1.value_or("0")));
      gens.push_back(kU * parse_rpoly(args.g2.value_or("0")));
    }
    for (const auto& g : args.generators) gens.push_back(parse_rpoly(g));
    const RCode code = code_from_generators(ctx, gens);
    Z4Code image = gray_image(code);
    const GrayKernelReport rep = gray_kernel_report(code);

    std::optional<unsigned> d;
    if (!flags.no_distance && !image.is_zero()) {
      d = min_lee_distance(image, distance_options(flags));
      if (flags.progress) std::cerr << '\n';
      image = image.with_min_lee(*d);
    }
    const bool sigma_ok = is_shift_invariant(image);
    const bool tau_ok = is_shift_invariant(code, ctx.lambda());

    CommandResult r;
    if (flags.json) {
      auto j = nlohmann::json::parse(to_json(code, image));
      j["parameters"] = format_parameters(image);
      j["r_k1"] = rep.r_k1;
      j["r_k2"] = rep.r_k2;
      j["sigma_invariant"] = sigma_ok;
      j["tau_invariant"] = tau_ok;
      r.out = j.dump() + "\n";
      return r;
    }
    std::ostringstream out;
    out << "parameters\t" << format_parameters(image) << '\n';
    if (image.is_zero()) out << "note\tzero Gray image: minimum Lee distance undefined\n";
    out << "|C|\t" << type_string(rep.r_k1, rep.r_k2) << '\n';
    out << "|phi(C)|\t" << type_string(rep.gray_k1, rep.gray_k2) << '\n';
    out << "gray_kernel_log2\t" << rep.kernel_log2() << '\n';
    out << "sigma_invariant\t" << (sigma_ok ? "true" : "false") << '\n';
    out << "tau_invariant\t" << (tau_ok ? "true" : "false") << '\n';
    r.out = out.str();
    return r;
  });
}

CommandResult cmd_table7(const CommonFlags& flags) {
  return guarded([&] {
    const QuotientCtx ctx(7, kOnePlus2u);
    std::ostringstream out;
    nlohmann::json rows = nlohmann::json::array();
    bool all = true;
    if (!flags.json) out << "g1\tg2\tcomputed\tpublished\tmatch\n";
    for (const auto& row : reference::length7_table()) {
      const RCode code = code_from_pair(ctx, parse_rpoly(row.g1), parse_rpoly(row.g2));
      const Z4Code image = gray_image(code);
      std::optional<unsigned> d;
      if (!flags.no_distance && !image.is_zero()) d = min_lee_distance(image, distance_options(flags));
      const auto& p = row.published;
      const bool match = image.k1() == p.k1 && image.k2() == p.k2 && (flags.no_distance || d == p.min_lee);
      all = all && match;
      const std::string computed = row_params(image, d);
      const std::string published = format_parameters(p.length, p.k1, p.k2, p.min_lee);
      if (flags.json) {
        rows.push_back({{"g1", row.g1}, {"g2", row.g2}, {"computed", computed}, {"published", published}, {"match", match}});
      } else {
        out << row.g1 << '\t' << row.g2 << '\t' << computed << '\t' << published << '\t' << (match ? "yes" : "no") << '\n';
      }
    }
    CommandResult r;
    r.out = flags.json ? rows.dump() + "\n" : out.str();
    r.exit_code = all ? 0 : 1;
    return r;
  });
}

CommandResult cmd_verify(const VerifyArgs& args, const CommonFlags& flags) {
  return guarded([&] {
    Rng rng(flags.seed);
    std::ostringstream out, err;
    const std::vector<std::size_t> all = parse_n_list(args.n);
    Tally total;
    auto record = [&](std::size_t n, const Tally& t) {
      tally_line(out, args.property, n, t);
      total.checked += t.checked;
      total.failures += t.failures;
    };
    out << "property\tn\tchecked\tfailures\n";
    const std::string& p = args.property;
    if (p == "phi-tau-sigma") {
      for (std::size_t n : all) {
        if (n == 0) throw Error("n must be positive");
        record(n, verify_phi_tau_sigma(n, args.trials, rng, out));
      }
    } else if (p == "mu-isomorphism") {
      for (std::size_t n : odd_only(all, err)) record(n, verify_mu_isomorphism(n, args.trials, rng, out));
    } else if (p == "gray-cyclic") {
      for (std::size_t n : odd_only(all, err)) record(n, verify_gray_cyclic(n, args.trials, rng, out));
    } else if (p == "distance-transport") {
      for (std::size_t n : odd_only(all, err)) record(n, verify_distance_transport(n, args.trials, rng, flags, out));
    } else if (p == "factor-product") {
      for (std::size_t n : odd_only(all, err)) record(n, verify_factor_product(n, out));
    } else if (p == "gray-kernel") {
      for (std::size_t n : all) {
        if (n == 0) throw Error("n must be positive");
        record(n, verify_gray_kernel(n, args.trials, rng, out));
      }
    } else {
      throw Error("unknown property '" + p +
                  "' (expected phi-tau-sigma, mu-isomorphism, gray-cyclic, distance-transport, factor-product, "
                  "gray-kernel)");
    }
    out << "seed\t" << flags.seed << '\n';
    out << "result\t" << (total.failures == 0 ? "pass" : "fail") << '\n';
    return CommandResult{total.failures == 0 ? 0 : 1, out.str(), err.str()};
  });
}

CommandResult cmd_gray_generators(const GrayArgs& args, const CommonFlags& flags) {
  return guarded([&] {
    const Z4Poly a = parse_z4poly(args.a);
    const Z4Poly b = parse_z4poly(args.b);
    const auto [first, second] = gray_poly_generators(a, b, args.n);
    std::ostringstream out;
    nlohmann::json j;
    j["first"] = format_poly(first);
    j["second"] = format_poly(second);
    out << "first\t" << format_poly(first) << '\n' << "second\t" << format_poly(second) << '\n';
    if (args.analyze) {
      Z4Code span = z4_cyclic_code({first, second}, 2 * args.n);
      const RCode code(QuotientCtx(args.n, kOnePlus2u), {embed(a) + u_times(b)});
      const bool same = same_code(span, gray_image(code));
      if (!span.is_zero() && !flags.no_distance) span = span.with_min_lee(min_lee_distance(span, distance_options(flags)));
      out << "parameters\t" << format_parameters(span) << '\n';
      out << "equals_gray_image\t" << (same ? "true" : "false") << '\n';
      j["parameters"] = format_parameters(span);
      j["equals_gray_image"] = same;
      if (span.min_lee()) j["min_lee_distance"] = *span.min_lee();
    }
    CommandResult r;
    r.out = flags.json ? j.dump() + "\n" : out.str();
    return r;
  });
}

}  // namespace z4u::cli
