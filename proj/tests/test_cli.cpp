#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"
#include "z4u/codes.hpp"
#include "z4u/errors.hpp"

using namespace z4u;
using namespace z4u::cli;

namespace {

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("parse_n_list") {
  CHECK(parse_n_list("9") == std::vector<std::size_t>{9});
  CHECK(parse_n_list("3,5,7") == std::vector<std::size_t>{3, 5, 7});
  CHECK(parse_n_list("1..4") == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK_THROWS_AS(parse_n_list(""), ParseError);
  CHECK_THROWS_AS(parse_n_list("5..3"), ParseError);
  CHECK_THROWS_AS(parse_n_list("3,x"), ParseError);
}

TEST_CASE("factor") {
  const CommandResult r = cmd_factor(7, {});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x+3\nx^3+2x^2+x+3\nx^3+3x^2+2x+3\n");

  CommonFlags json;
  json.json = true;
  const auto j = nlohmann::json::parse(cmd_factor(3, json).out);
  CHECK(j["n"] == 3);
  CHECK(j["factors"] == nlohmann::json::array({"x+3", "x^2+x+1"}));

  const CommandResult even = cmd_factor(4, {});
  CHECK(even.exit_code == 1);
  CHECK(even.out.empty());
  CHECK(even.err.find("error:") == 0);
}

TEST_CASE("code info") {
  CodeArgs args;
  args.n = 7;
  args.g1 = "0";
  args.g2 = "x^4+(1+2u)x^3+3x^2+3";
  const CommandResult r = cmd_code_info(args, {});
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "parameters\t[14, 4^3 2^3, 8]"));
  CHECK(has_line(r.out, "sigma_invariant\ttrue"));
  CHECK(has_line(r.out, "tau_invariant\ttrue"));

  CommonFlags nd;
  nd.no_distance = true;
  CHECK(has_line(cmd_code_info(args, nd).out, "parameters\t[14, 4^3 2^3]"));

  // The whole space loses its {0,2} part under the Gray map.
  CodeArgs whole;
  whole.n = 2;
  whole.generators = {"1"};
  const CommandResult w = cmd_code_info(whole, {});
  CHECK(has_line(w.out, "|C|\t4^4 2^0"));
  CHECK(has_line(w.out, "|phi(C)|\t4^2 2^2"));
  CHECK(has_line(w.out, "gray_kernel_log2\t2"));

  CodeArgs zero;
  zero.n = 3;
  zero.generators = {"0"};
  CHECK(cmd_code_info(zero, {}).out.find("zero Gray image") != std::string::npos);

  CodeArgs bad = args;
  bad.g2 = "x^+1";
  CHECK(cmd_code_info(bad, {}).exit_code == 1);
  bad = args;
  bad.lambda = "2";
  CHECK(cmd_code_info(bad, {}).exit_code == 1);
}

TEST_CASE("code info JSON round-trips") {
  CodeArgs args;
  args.n = 9;
  args.g1 = "0";
  args.g2 = "x^8+(1+2u)x^7+x^6+(1+2u)x^5+x^4+(1+2u)x^3+3x^2+(3+2u)x+3";
  CommonFlags flags;
  flags.json = true;
  const std::string text = cmd_code_info(args, flags).out;
  const auto j = nlohmann::json::parse(text);
  CHECK(j["parameters"] == "[18, 4^1 2^6, 8]");
  const CodeRecord rec = code_from_json(text);
  CHECK(rec.code.n() == 9);
  CHECK(rec.k1 == 1);
  CHECK(rec.k2 == 6);
  CHECK(rec.min_lee_distance == 8u);
  const Z4Code again = gray_image(rec.code);
  CHECK(again.k1() == 1);
  CHECK(again.k2() == 6);
}

TEST_CASE("budget exit code") {
  CodeArgs args;
  args.n = 7;
  args.g1 = "(3+2u)x+1";
  args.g2 = "3";
  CommonFlags flags;
  flags.budget = 16;
  // The sweep certifies d = 2 without enumeration.
  const CommandResult r = cmd_code_info(args, flags);
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "parameters\t[14, 4^7 2^6, 2]"));

  CodeArgs row1;
  row1.n = 7;
  row1.g1 = "0";
  row1.g2 = "3x^4+2x^3+x^2+(3+2u)x+3";
  flags.budget = 4;
  CHECK(cmd_code_info(row1, flags).exit_code == 2);
}

TEST_CASE("table7") {
  CommonFlags flags;
  flags.no_distance = true;
  const CommandResult r = cmd_table7(flags);
  CHECK(r.out.find("g1\tg2\tcomputed\tpublished\tmatch\n") == 0);
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 12);
  CHECK(r.out.find("\t[14, 4^3 2^0]\t[14, 4^3 2^0, 12]\tyes\n") != std::string::npos);
  CHECK(r.out.find("\t[14, 4^3 2^3]\t[14, 4^3 2^3, 8]\tyes\n") != std::string::npos);
  CHECK(r.exit_code == 1);

  flags.json = true;
  const auto j = nlohmann::json::parse(cmd_table7(flags).out);
  CHECK(j.size() == 11);
  CHECK(j[0]["match"] == true);
}

TEST_CASE("verify") {
  VerifyArgs args{"phi-tau-sigma", "9", 500};
  const CommandResult r = cmd_verify(args, {});
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "phi-tau-sigma\t9\t500\t0"));
  CHECK(has_line(r.out, "seed\t42"));
  CHECK(has_line(r.out, "result\tpass"));

  const CommandResult f = cmd_verify({"factor-product", "1..25", 1}, {});
  CHECK(f.exit_code == 0);
  CHECK(f.err.find("skipping n = 2") != std::string::npos);

  const CommandResult k = cmd_verify({"gray-kernel", "2", 10}, {});
  CHECK(k.exit_code == 0);
  CHECK(k.out.find("kernel_witness\t[2, 0]\t->\t[0, 0, 0, 0]") != std::string::npos);

  for (const char* p : {"mu-isomorphism", "gray-cyclic", "distance-transport"}) {
    CAPTURE(p);
    CHECK(cmd_verify({p, "3,7", 20}, {}).exit_code == 0);
  }
  CHECK(cmd_verify({"mu-isomorphism", "4", 20}, {}).exit_code == 1);
  CHECK(cmd_verify({"nonsense", "3", 1}, {}).exit_code == 1);
}

TEST_CASE("gray generators") {
  GrayArgs args{"x+x^2+x^4+x^5", "2x+2x^3+2x^5", 6, true};
  const CommandResult r = cmd_gray_generators(args, {});
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "first\t2x^10+2x^9+2x^8+2x^5+2x^3+2x"));
  CHECK(has_line(r.out, "second\tx^11+x^10+x^8+x^7+x^5+x^4+x^2+x"));
  CHECK(has_line(r.out, "parameters\t[12, 4^2 2^5, 8]"));
  CHECK(has_line(r.out, "equals_gray_image\ttrue"));

  const CommandResult z = cmd_gray_generators({"0", "0", 3, false}, {});
  CHECK(z.out == "first\t0\nsecond\t0\n");
  const CommandResult o = cmd_gray_generators({"1", "0", 1, false}, {});
  CHECK(o.out == "first\t2x\nsecond\tx+1\n");
  CHECK(cmd_gray_generators({"x^3", "0", 3, false}, {}).exit_code == 1);
}

TEST_CASE("commands are deterministic") {
  VerifyArgs args{"gray-kernel", "3..5", 50};
  CommonFlags flags;
  flags.seed = 7;
  CHECK(cmd_verify(args, flags).out == cmd_verify(args, flags).out);
  CodeArgs c;
  c.n = 7;
  c.g1 = "(3+2u)x^3+x^2+2x+1";
  c.g2 = "(1+2u)x+1";
  CHECK(cmd_code_info(c, {}).out == cmd_code_info(c, {}).out);
}
