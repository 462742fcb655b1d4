#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "borbit/roots.hpp"
#include "borbit/signed_perm.hpp"

namespace borbit {

enum class GroupMode { C, A };

inline std::string mode_str(GroupMode m) { return m == GroupMode::C ? "C" : "A"; }

// Elements are handled uniformly as permutations of m points (0-based
// images): m = 2n display positions in type C, m = n in type A.
using FlatPerm = std::vector<int>;

FlatPerm flat_identity(int m);
FlatPerm flat_compose(const FlatPerm& u, const FlatPerm& w);  // u after w
FlatPerm flat_inverse(const FlatPerm& w);
bool flat_is_involution(const FlatPerm& w);
std::uint64_t flat_key(const FlatPerm& w);
// "[2,-1,3]" in type C (signed window), "[2,1,3]" in type A (1-based images).
std::string window_of_flat(const FlatPerm& w, GroupMode mode);
FlatPerm flat_of_window(const std::string& s, GroupMode mode);

// Fundamental generators: adjacent transpositions, plus the sign change on
// the last coordinate in type C (simple system e1-e2,..,e_{n-1}-e_n, 2e_n).
std::vector<FlatPerm> fundamental_generators(int n, GroupMode mode);
// Every reflection: n^2 of them in type C, n(n-1)/2 transpositions in type A.
std::vector<FlatPerm> all_reflections(int n, GroupMode mode);

// The full weak-order BFS + reflection-cover structure of the group, with
// the Bruhat order as the transitive closure of covers u -> u*t where t is a
// reflection and length goes up by exactly one.  This is the order oracle
// everything else is checked against.
//
// Full closure bitsets are kept while the group is small; above the
// threshold only down-sets restricted to involutions are stored (that is all
// the larger ranks are queried for), and other queries fall back to a
// breadth-first search over the cover digraph.
class BruhatPoset {
 public:
  static BruhatPoset build(int n, GroupMode mode, int max_n = 6);

  int n() const { return n_; }
  GroupMode mode() const { return mode_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const FlatPerm& element(int idx) const { return elements_[idx]; }
  int index_of(const FlatPerm& w) const;  // throws if absent
  int length(int idx) const { return lengths_[idx]; }
  const std::vector<int>& up_covers(int idx) const { return up_covers_[idx]; }

  bool leq(int u, int w) const;  // u <= w in Bruhat order

  // Involution element indices, sorted by (length, window notation).
  const std::vector<int>& involution_indices() const { return involutions_; }
  // Position of an element in involution_indices(), or -1.
  int involution_pos(int idx) const { return inv_pos_[idx]; }
  // Bit r set iff involution_indices()[r] <= w.
  const boost::dynamic_bitset<>& involution_downset(int w) const { return down_inv_[w]; }

 private:
  int n_ = 0;
  GroupMode mode_ = GroupMode::C;
  std::vector<FlatPerm> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> up_covers_;
  std::vector<boost::dynamic_bitset<>> down_;      // full closure (small groups only)
  std::vector<boost::dynamic_bitset<>> down_inv_;  // down-sets over involution positions
  std::vector<int> inv_pos_;
  std::vector<int> involutions_;
};

// Closed-form length: inversion count of the root system in display order
// (type C) or plain inversions (type A).  Cross-checked against the BFS.
int length_formula(const FlatPerm& w, GroupMode mode);

// Involutions of W(C_n), sorted by (BFS length, window notation).
std::vector<Involution> enumerate_involutions(int n, int max_n = 6);

}  // namespace borbit
