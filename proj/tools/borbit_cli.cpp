#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "borbit/verify.hpp"

namespace {

// --mode C|A
borbit::GroupMode parse_mode(const std::string& s) {
  if (s == "C" || s == "c") return borbit::GroupMode::C;
  if (s == "A" || s == "a") return borbit::GroupMode::A;
  throw CLI::ValidationError("--mode", "expected C or A");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for involution orbits of the symplectic Borel action"};
  app.require_subcommand(1);

  borbit::RunConfig cfg;
  std::string mode = "C";
  if (const char* env = std::getenv("BORBIT_MAX_N")) {
    try {
      cfg.max_n = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: BORBIT_MAX_N must be an integer\n";
      return 2;
    }
  }

  std::string format;  // empty = per-subcommand default, resolved after parse
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank")->check(CLI::PositiveNumber);
    sub->add_option("--mode", mode, "group family: C (signed) or A (plain)");
    sub->add_option("--seed", cfg.seed, "seed for the randomized suites");
    sub->add_option("--format", format, "output format");
    sub->add_option("--output", cfg.output, "write the report to this file instead of stdout");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list involutions with length, support, R*");
  add_common(enumerate);

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  add_common(verify);

  auto* hasse = app.add_subcommand("hasse", "export the involution order as a Hasse diagram");
  add_common(hasse);

  auto* degenerate = app.add_subcommand("degenerate", "trace one degeneration curve");
  int di = 0, dk = 0, dj = 0;
  degenerate->add_option("i", di, "first index")->required();
  degenerate->add_option("k", dk, "middle index")->required();
  degenerate->add_option("j", dj, "last index")->required();
  add_common(degenerate);

  auto* compare = app.add_subcommand("compare", "compare two involutions in all three orders");
  std::string win_a, win_b;
  compare->add_option("sigma", win_a, "first involution, window notation")->required();
  compare->add_option("tau", win_b, "second involution, window notation")->required();
  add_common(compare);

  try {
    app.parse(argc, argv);
    cfg.mode = parse_mode(mode);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  cfg.format = !format.empty() ? format : hasse->parsed() ? "dot" : "text";

  if (enumerate->parsed()) return borbit::cmd_enumerate(cfg);
  if (verify->parsed()) return borbit::cmd_verify(cfg);
  if (hasse->parsed()) return borbit::cmd_hasse(cfg);
  if (degenerate->parsed()) return borbit::cmd_degenerate(cfg, di, dk, dj);
  if (compare->parsed()) return borbit::cmd_compare(cfg, win_a, win_b);
  return 2;
}
