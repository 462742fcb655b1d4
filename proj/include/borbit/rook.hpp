#pragma once

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "borbit/weyl.hpp"

namespace borbit {

// 0-1 matrix of an involution: a rook at (display row p, column w[p]) for
// every p.  m = 2n in type C (centrally symmetric placement), m = n in A.
struct RookPlacement {
  int m = 0;
  GroupMode mode = GroupMode::C;
  std::vector<int> rook_col;  // display row -> display column

  bool has_rook(int r, int c) const { return rook_col[r] == c; }
};

RookPlacement rook_placement(const FlatPerm& w, GroupMode mode);

// R (full) and its strictly-lower truncation R*, both m x m row-major in
// display order.  Entry (r,c) of R counts rooks weakly south-west of the
// box: rows r..bottom, columns 0..c.  rank_tables computes the counts and,
// independently, the ranks of the corresponding submatrices, and insists
// they agree.
struct RankTables {
  int m = 0;
  std::vector<int> full;
  std::vector<int> lower;

  int full_at(int r, int c) const { return full[static_cast<size_t>(r) * m + c]; }
  int lower_at(int r, int c) const { return lower[static_cast<size_t>(r) * m + c]; }
};

RankTables rank_tables(const RookPlacement& p);

bool entrywise_leq(const std::vector<int>& a, const std::vector<int>& b);

// One involution pair with the three order verdicts that must coincide.
struct PairVerdict {
  int a = 0, b = 0;  // positions in the poset's involution list
  bool bruhat = false, rank_full = false, rank_lower = false;
  bool consistent() const { return bruhat == rank_full && bruhat == rank_lower; }
};

struct EquivalenceReport {
  int n = 0;
  GroupMode mode = GroupMode::C;
  long pairs = 0;
  long mismatches = 0;
  std::vector<PairVerdict> counterexamples;  // mismatching pairs only
  std::vector<PairVerdict> table;            // all pairs when requested
};

// Checks sigma <= tau (Bruhat oracle) == R comparison == R* comparison over
// every ordered pair of involutions.
EquivalenceReport verify_equivalences(const BruhatPoset& poset, bool keep_table = false);

std::string equivalence_csv(const EquivalenceReport& rep, const BruhatPoset& poset);

// Double-quoted CSV field (inner quotes doubled); window notation carries
// commas, so every string field goes through this.
std::string csv_quote(const std::string& s);

// The involution subposet: order restricted from the group, covers computed
// by betweenness.  Elements sorted by (length, window).
struct InvolutionPoset {
  int n = 0;
  GroupMode mode = GroupMode::C;
  std::vector<std::string> windows;
  std::vector<int> lengths;
  std::vector<boost::dynamic_bitset<>> down;  // down[t][s] = (s <= t)
  std::vector<std::pair<int, int>> cover_edges;

  bool leq(int s, int t) const { return down[t].test(s); }
  int size() const { return static_cast<int>(windows.size()); }
};

InvolutionPoset involution_poset(const BruhatPoset& poset);

std::string hasse_dot(const InvolutionPoset& p);
nlohmann::ordered_json hasse_json(const InvolutionPoset& p);

}  // namespace borbit
