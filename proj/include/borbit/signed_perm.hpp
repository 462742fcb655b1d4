#pragma once

#include <string>
#include <vector>

#include "borbit/indexing.hpp"

namespace borbit {

// Element of the hyperoctahedral group: a permutation w of {±1,..,±n} with
// w(-i) = -w(i).  Only the images of 1..n are stored (the "window").
class SignedPermutation {
 public:
  SignedPermutation() = default;
  static SignedPermutation identity(int n);
  // Validates that images describe a bijection of {±1,..,±n}.
  static SignedPermutation from_window(std::vector<int> images);
  // Window notation, e.g. "[2,-1,3]".  Whitespace after commas is accepted.
  static SignedPermutation parse_window(const std::string& s);

  int n() const { return static_cast<int>(img_.size()); }
  int apply(int i) const;
  SignedPermutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;
  std::string window() const;

  // Image of the group element in the symmetric group on the 2n display
  // positions: flat[p] = display position of w(signed_of_pos(p)).
  std::vector<int> to_flat() const;
  static SignedPermutation from_flat(const std::vector<int>& flat);

  bool operator==(const SignedPermutation& o) const { return img_ == o.img_; }
  bool operator!=(const SignedPermutation& o) const { return !(*this == o); }
  bool operator<(const SignedPermutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;  // img_[i-1] = w(i)
};

// result(i) = u(w(i)): apply w first, then u.
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& w);

// A validated involution (w*w = id).  The identity is admitted; it serves as
// the bottom element of the order studied here.
class Involution {
 public:
  Involution() = default;
  explicit Involution(SignedPermutation w);
  static Involution identity(int n) { return Involution(SignedPermutation::identity(n)); }
  const SignedPermutation& perm() const { return w_; }
  int n() const { return w_.n(); }
  std::string window() const { return w_.window(); }
  bool operator==(const Involution& o) const { return w_ == o.w_; }
  bool operator<(const Involution& o) const { return w_ < o.w_; }

 private:
  SignedPermutation w_;
};

}  // namespace borbit
