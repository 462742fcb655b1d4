#pragma once

#include <cassert>
#include <cstdlib>

namespace borbit {

// Signed indices run 1..n, -n..-1 (zero is never a valid index).  Rows and
// columns of 2n x 2n matrices are laid out in "display order":
//   position 0..n-1   <->  1..n
//   position n..2n-1  <->  -n..-1
inline int display_pos(int i, int n) {
  assert(i != 0 && i >= -n && i <= n);
  return i > 0 ? i - 1 : i + 2 * n;
}

inline int signed_of_pos(int p, int n) {
  assert(p >= 0 && p < 2 * n);
  return p < n ? p + 1 : p - 2 * n;
}

inline bool valid_signed_index(int i, int n) { return i != 0 && i >= -n && i <= n; }

}  // namespace borbit
