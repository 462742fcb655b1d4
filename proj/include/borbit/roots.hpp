#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "borbit/rational.hpp"
#include "borbit/signed_perm.hpp"

namespace borbit {

enum class RootKind { diff, sum, lng };

// Positive root of type C_n: e_i - e_j or e_i + e_j (i < j), or 2e_i.
struct RootC {
  RootKind kind;
  int i, j;  // diff/sum: 1 <= i < j; lng: i == j

  static RootC diff(int i, int j);
  static RootC sum(int i, int j);
  static RootC lng(int i);

  bool operator==(const RootC& o) const { return kind == o.kind && i == o.i && j == o.j; }
  bool operator!=(const RootC& o) const { return !(*this == o); }
  bool operator<(const RootC& o) const {
    return std::tuple(static_cast<int>(kind), i, j) <
           std::tuple(static_cast<int>(o.kind), o.i, o.j);
  }

  std::string str() const;                       // "e1-e2", "e1+e2", "2e3"
  static RootC parse(const std::string& s);
};

// Deterministic listing: differences (lex), then sums (lex), then long roots.
std::vector<RootC> positive_roots(int n);

// Standard euclidean inner product of the two roots.
Rat inner(const RootC& a, const RootC& b);

bool is_orthogonal_set(const std::vector<RootC>& roots);

// The reflection r_alpha as a signed permutation of {±1,..,±n}.
SignedPermutation reflection(const RootC& alpha, int n);

// Support of an involution, read off its cycle structure: a fixed-point-free
// orthogonal set containing no pair whose difference is again a positive
// root.  Result is sorted.
std::vector<RootC> support(const Involution& sigma);

// Product of the (commuting) reflections of a pairwise orthogonal set.
Involution involution_from_roots(const std::vector<RootC>& roots, int n);

// Type A analogue: supports of involutions of S_n are sets of e_i - e_j read
// off the 2-cycles.  The argument holds 1-based images.
std::vector<RootC> support_a(const std::vector<int>& images);

}  // namespace borbit
