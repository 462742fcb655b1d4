#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "borbit/roots.hpp"
#include "borbit/weyl.hpp"

using namespace borbit;

namespace {

// coordinates of a root in the standard basis
std::vector<int> coords(const RootC& a, int n) {
  std::vector<int> v(n, 0);
  switch (a.kind) {
    case RootKind::diff: v[a.i - 1] = 1; v[a.j - 1] = -1; break;
    case RootKind::sum: v[a.i - 1] = 1; v[a.j - 1] = 1; break;
    default: v[a.i - 1] = 2;
  }
  return v;
}

bool difference_is_positive_root(const RootC& a, const RootC& b, int n) {
  auto va = coords(a, n), vb = coords(b, n);
  for (int t = 0; t < n; ++t) va[t] -= vb[t];
  for (const auto& r : positive_roots(n))
    if (coords(r, n) == va) return true;
  return false;
}

}  // namespace

TEST_CASE("positive root listing") {
  CHECK(positive_roots(1).size() == 1);
  CHECK(positive_roots(2).size() == 4);
  CHECK(positive_roots(3).size() == 9);
  CHECK(positive_roots(4).size() == 16);
  std::vector<std::string> want = {"e1-e2", "e1-e3", "e2-e3", "e1+e2", "e1+e3",
                                   "e2+e3", "2e1",   "2e2",   "2e3"};
  std::vector<std::string> got;
  for (const auto& a : positive_roots(3)) got.push_back(a.str());
  CHECK(got == want);
}

TEST_CASE("root parsing round trip") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : positive_roots(n)) CHECK(RootC::parse(a.str()) == a);
  CHECK_THROWS(RootC::parse("e1"));
  CHECK_THROWS(RootC::parse("2e0"));
  CHECK_THROWS(RootC::parse("e2-e2"));
  CHECK_THROWS(RootC::parse("e2-e1"));
  CHECK_THROWS(RootC::parse("e2+e1"));
  CHECK_THROWS(RootC::parse("x"));
  CHECK_THROWS(RootC::parse("e1*e2"));
  CHECK_THROWS(RootC::parse(""));
  CHECK_THROWS(RootC::diff(2, 2));
  CHECK_THROWS(RootC::sum(3, 2));
  CHECK_THROWS(RootC::lng(0));
}

TEST_CASE("inner products") {
  CHECK(inner(RootC::diff(1, 2), RootC::diff(1, 2)) == Rat(2));
  CHECK(inner(RootC::lng(1), RootC::lng(1)) == Rat(4));
  CHECK(inner(RootC::diff(1, 2), RootC::sum(1, 2)) == Rat(0));
  CHECK(inner(RootC::diff(1, 2), RootC::lng(1)) == Rat(2));
  CHECK(inner(RootC::diff(1, 2), RootC::lng(2)) == Rat(-2));
  CHECK(inner(RootC::diff(1, 2), RootC::diff(3, 4)) == Rat(0));
  CHECK(inner(RootC::sum(1, 3), RootC::lng(3)) == Rat(2));
  CHECK(inner(RootC::sum(1, 3), RootC::diff(2, 3)) == Rat(-1));
  // matches the coordinate computation everywhere
  for (const auto& a : positive_roots(3))
    for (const auto& b : positive_roots(3)) {
      auto va = coords(a, 3), vb = coords(b, 3);
      int dot = 0;
      for (int t = 0; t < 3; ++t) dot += va[t] * vb[t];
      CHECK(inner(a, b) == Rat(dot));
    }
}

TEST_CASE("orthogonal sets") {
  CHECK(is_orthogonal_set({}));
  CHECK(is_orthogonal_set({RootC::diff(1, 2), RootC::sum(1, 2)}));
  CHECK(is_orthogonal_set({RootC::lng(1), RootC::lng(2)}));
  CHECK_FALSE(is_orthogonal_set({RootC::lng(1), RootC::sum(1, 2)}));
  CHECK_FALSE(is_orthogonal_set({RootC::diff(1, 2), RootC::diff(2, 3)}));
}

TEST_CASE("reflections square to the identity and have odd length") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : positive_roots(n)) {
      auto r = reflection(a, n);
      CHECK(compose(r, r).is_identity());
      CHECK_FALSE(r.is_identity());
      CHECK(length_formula(r.to_flat(), GroupMode::C) % 2 == 1);
    }
}

TEST_CASE("support of frozen examples") {
  CHECK(support(Involution::identity(3)).empty());
  auto both_signs = Involution(SignedPermutation::parse_window("[-1,-2]"));
  CHECK(support(both_signs) == std::vector<RootC>{RootC::lng(1), RootC::lng(2)});
  auto mixed = Involution(SignedPermutation::parse_window("[4,-2,3,1]"));
  CHECK(support(mixed) == std::vector<RootC>{RootC::diff(1, 4), RootC::lng(2)});
  auto swap12 = Involution(SignedPermutation::parse_window("[2,1,3]"));
  CHECK(support(swap12) == std::vector<RootC>{RootC::diff(1, 2)});
  auto negpair = Involution(SignedPermutation::parse_window("[-2,-1]"));
  CHECK(support(negpair) == std::vector<RootC>{RootC::sum(1, 2)});
}

TEST_CASE("support invariants for every involution") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& sigma : enumerate_involutions(n)) {
      auto d = support(sigma);
      CHECK(is_orthogonal_set(d));
      CHECK(std::is_sorted(d.begin(), d.end()));
      for (const auto& a : d)
        for (const auto& b : d) {
          if (a == b) continue;
          CHECK_FALSE(difference_is_positive_root(a, b, n));
        }
      // the support really is a factorization of sigma
      CHECK(involution_from_roots(d, n) == sigma);
    }
}

TEST_CASE("involutions from orthogonal sets") {
  CHECK(involution_from_roots({}, 3) == Involution::identity(3));
  CHECK_THROWS(involution_from_roots({RootC::lng(1), RootC::sum(1, 2)}, 2));
  // order does not matter: the reflections commute
  auto d = std::vector<RootC>{RootC::lng(2), RootC::diff(1, 3)};
  auto a = involution_from_roots(d, 3);
  std::reverse(d.begin(), d.end());
  CHECK(involution_from_roots(d, 3) == a);
  // an orthogonal set that is not a support normalizes under the round trip:
  // r_{e1-e2} r_{e1+e2} = r_{2e1} r_{2e2}
  auto w = involution_from_roots({RootC::diff(1, 2), RootC::sum(1, 2)}, 2);
  CHECK(w.window() == "[-1,-2]");
  CHECK(support(w) == std::vector<RootC>{RootC::lng(1), RootC::lng(2)});
}

TEST_CASE("type A supports") {
  CHECK(support_a({1, 2, 3}).empty());
  CHECK(support_a({2, 1, 3}) == std::vector<RootC>{RootC::diff(1, 2)});
  CHECK(support_a({2, 1, 4, 3}) ==
        std::vector<RootC>{RootC::diff(1, 2), RootC::diff(3, 4)});
  CHECK(support_a({4, 2, 5, 1, 3, 6}) ==
        std::vector<RootC>{RootC::diff(1, 4), RootC::diff(3, 5)});
  CHECK_THROWS(support_a({2, 3, 1}));
}
