#include "borbit/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace borbit {

RootC RootC::diff(int i, int j) {
  if (i < 1 || i >= j) throw std::invalid_argument("difference root needs 1 <= i < j");
  return RootC{RootKind::diff, i, j};
}

RootC RootC::sum(int i, int j) {
  if (i < 1 || i >= j) throw std::invalid_argument("sum root needs 1 <= i < j");
  return RootC{RootKind::sum, i, j};
}

RootC RootC::lng(int i) {
  if (i < 1) throw std::invalid_argument("long root needs i >= 1");
  return RootC{RootKind::lng, i, i};
}

std::string RootC::str() const {
  switch (kind) {
    case RootKind::diff: return "e" + std::to_string(i) + "-e" + std::to_string(j);
    case RootKind::sum: return "e" + std::to_string(i) + "+e" + std::to_string(j);
    default: return "2e" + std::to_string(i);
  }
}

RootC RootC::parse(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("unparsable root: " + s); };
  if (s.size() >= 3 && s[0] == '2' && s[1] == 'e') {
    size_t pos = 0;
    int i = std::stoi(s.substr(2), &pos);
    if (pos + 2 != s.size()) throw bad();
    return lng(i);
  }
  if (s.empty() || s[0] != 'e') throw bad();
  size_t sep = s.find_first_of("+-", 1);
  if (sep == std::string::npos || sep + 2 > s.size() || s[sep + 1] != 'e') throw bad();
  size_t pos = 0;
  int i = std::stoi(s.substr(1, sep - 1), &pos);
  if (pos != sep - 1) throw bad();
  int j = std::stoi(s.substr(sep + 2), &pos);
  if (pos + sep + 2 != s.size()) throw bad();
  return s[sep] == '-' ? diff(i, j) : sum(i, j);
}

std::vector<RootC> positive_roots(int n) {
  std::vector<RootC> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(RootC::diff(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(RootC::sum(i, j));
  for (int i = 1; i <= n; ++i) out.push_back(RootC::lng(i));
  return out;
}

namespace {
// coordinate of alpha along e_k
int coord(const RootC& a, int k) {
  switch (a.kind) {
    case RootKind::diff: return (k == a.i) - (k == a.j);
    case RootKind::sum: return (k == a.i) + (k == a.j);
    default: return k == a.i ? 2 : 0;
  }
}
}  // namespace

Rat inner(const RootC& a, const RootC& b) {
  // both roots touch at most four coordinates; sum the products there
  int acc = 0;
  int ks[4] = {a.i, a.j, b.i, b.j};
  for (int t = 0; t < 4; ++t) {
    bool dup = false;
    for (int u = 0; u < t; ++u) dup |= ks[u] == ks[t];
    if (!dup) acc += coord(a, ks[t]) * coord(b, ks[t]);
  }
  return Rat(acc);
}

bool is_orthogonal_set(const std::vector<RootC>& roots) {
  for (size_t x = 0; x < roots.size(); ++x)
    for (size_t y = x + 1; y < roots.size(); ++y)
      if (inner(roots[x], roots[y]) != 0) return false;
  return true;
}

SignedPermutation reflection(const RootC& alpha, int n) {
  if (alpha.j > n) throw std::invalid_argument("root index exceeds rank");
  std::vector<int> img(n);
  for (int k = 1; k <= n; ++k) img[k - 1] = k;
  switch (alpha.kind) {
    case RootKind::diff:
      img[alpha.i - 1] = alpha.j;
      img[alpha.j - 1] = alpha.i;
      break;
    case RootKind::sum:
      img[alpha.i - 1] = -alpha.j;
      img[alpha.j - 1] = -alpha.i;
      break;
    default:
      img[alpha.i - 1] = -alpha.i;
  }
  return SignedPermutation::from_window(std::move(img));
}

std::vector<RootC> support(const Involution& sigma) {
  std::vector<RootC> out;
  int n = sigma.n();
  for (int i = 1; i <= n; ++i) {
    int v = sigma.perm().apply(i);
    if (v == i) continue;
    if (v == -i)
      out.push_back(RootC::lng(i));
    else if (v > i)
      out.push_back(RootC::diff(i, v));
    else if (v < 0 && -v > i)
      out.push_back(RootC::sum(i, -v));
    // v > 0, v < i and v < 0, -v < i were already handled from the other end
  }
  std::sort(out.begin(), out.end());
  return out;
}

Involution involution_from_roots(const std::vector<RootC>& roots, int n) {
  if (!is_orthogonal_set(roots))
    throw std::invalid_argument("roots are not pairwise orthogonal");
  auto w = SignedPermutation::identity(n);
  for (const auto& a : roots) w = compose(w, reflection(a, n));
  return Involution(w);
}

std::vector<RootC> support_a(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  std::vector<RootC> out;
  for (int i = 1; i <= n; ++i) {
    int v = images[i - 1];
    if (v < 1 || v > n) throw std::invalid_argument("not a permutation of 1..n");
    if (v > i) out.push_back(RootC::diff(i, v));
    if (images[v - 1] != i) throw std::invalid_argument("permutation is not an involution");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace borbit
