#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "borbit/weyl.hpp"

namespace borbit {

// Outcome of one verification suite.  `statement` spells out the property
// that was checked, so a failing report is readable on its own.
struct SuiteResult {
  std::string name;
  std::string statement;
  long checked = 0;
  long failures = 0;
  std::vector<std::string> samples;  // a few failing instances, if any
  bool passed() const { return failures == 0; }
};

// Bruhat order == R comparison == R* comparison, all involution pairs.
SuiteResult suite_order_equivalence(const BruhatPoset& poset);
// Tangent rank at f_sigma == BFS length, every involution.
SuiteResult suite_dimension(const BruhatPoset& poset);
// All south-west region ranks of u.f_sigma equal the R* entry, seeded
// random unipotent u, strictly-lower boxes.
SuiteResult suite_sw_rank_invariance(int n, std::uint64_t seed, int trials);
// Every curve g(s).f_tau hits the expected coefficients and tends to f_sigma.
SuiteResult suite_degeneration(int n);
// Torus rescaling carries f_D to f_{D,xi} for all supports, xi in {1,2,-1}.
SuiteResult suite_rescaling(int n);
// (gh).lambda = g.(h.lambda) and id.lambda = lambda, seeded random triples.
SuiteResult suite_action_axioms(int n, std::uint64_t seed, int trials);

struct RunConfig {
  int n = 2;
  GroupMode mode = GroupMode::C;
  std::uint64_t seed = 0;
  std::string format = "text";  // text | json | csv | dot, per command
  std::string output;           // empty = stdout
  int max_n = 6;
};

// Exit codes: 0 pass, 1 verification failure, 2 usage/operational error.
int cmd_verify(const RunConfig& cfg);
int cmd_enumerate(const RunConfig& cfg);
int cmd_hasse(const RunConfig& cfg);
int cmd_degenerate(const RunConfig& cfg, int i, int k, int j);
int cmd_compare(const RunConfig& cfg, const std::string& win_a, const std::string& win_b);

}  // namespace borbit
