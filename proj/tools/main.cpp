#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace z4u::cli;

  CLI::App app{"z4u: (1+2u)-constacyclic codes over Z4+uZ4 and their Gray images"};
  app.require_subcommand(1);

  CommonFlags flags;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", flags.json, "Emit JSON instead of TSV");
    sub->add_option("--seed", flags.seed, "Seed for randomized checks");
    sub->add_flag("--force", flags.force, "Enumerate even when the codeword count exceeds the budget");
    sub->add_flag("--no-distance", flags.no_distance, "Skip the minimum Lee distance computation");
    sub->add_option("--budget", flags.budget, "Largest codeword count enumerated without --force");
    sub->add_flag("--progress", flags.progress, "Report enumeration progress on stderr");
  };

  std::size_t factor_n = 0;
  auto* factor = app.add_subcommand("factor", "Factor x^n - 1 over Z4 (n odd)");
  factor->add_option("--n", factor_n, "Length")->required();
  add_common(factor);

  CodeArgs code_args;
  auto* code = app.add_subcommand("code", "Analyze the code generated by polynomials over R");
  code->add_option("--n", code_args.n, "Length")->required();
  code->add_option("--lambda", code_args.lambda, "Constacyclic constant")->capture_default_str();
  code->add_option("--gen", code_args.generators, "Generator polynomial (repeatable)");
  code->add_option("--g1", code_args.g1, "First generator of <g1, u g2>");
  code->add_option("--g2", code_args.g2, "Second generator of <g1, u g2> (multiplied by u)");
  add_common(code);

  auto* table7 = app.add_subcommand("table7", "Recompute the length-7 code table");
  add_common(table7);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--property", verify_args.property, "Property name")
      ->required()
      ->check(CLI::IsMember({"phi-tau-sigma", "mu-isomorphism", "gray-cyclic", "distance-transport",
                             "factor-product", "gray-kernel"}));
  verify->add_option("--n", verify_args.n, "Length, range a..b, or list a,b,c")->capture_default_str();
  verify->add_option("--trials", verify_args.trials, "Random trials per length")->capture_default_str();
  add_common(verify);

  GrayArgs gray_args;
  auto* gray = app.add_subcommand("gray", "Gray-image generators of the one-generator code <a + u b>");
  gray->add_option("--a", gray_args.a, "a(x) over Z4")->required();
  gray->add_option("--b", gray_args.b, "b(x) over Z4")->required();
  gray->add_option("--n", gray_args.n, "Length")->required();
  gray->add_flag("--analyze", gray_args.analyze, "Also report the image parameters");
  add_common(gray);

  CLI11_PARSE(app, argc, argv);

  CommandResult result;
  if (*factor) {
    result = cmd_factor(factor_n, flags);
  } else if (*code) {
    result = cmd_code_info(code_args, flags);
  } else if (*table7) {
    result = cmd_table7(flags);
  } else if (*verify) {
    result = cmd_verify(verify_args, flags);
  } else if (*gray) {
    result = cmd_gray_generators(gray_args, flags);
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
