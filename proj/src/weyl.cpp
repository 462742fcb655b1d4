// Group enumeration and Bruhat order for W(C_n) and S_n.
//
// Lengths come from a breadth-first search over the Cayley graph of the
// fundamental generators.  Covers are pairs (u, u*t), t any reflection, with
// length(u*t) = length(u) + 1; the Bruhat order is the transitive closure.
// Down-sets are accumulated as bitsets in BFS (= length) order, so closure
// construction is a single pass over the cover edges.

#include "borbit/weyl.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace borbit {

FlatPerm flat_identity(int m) {
  FlatPerm w(m);
  for (int p = 0; p < m; ++p) w[p] = p;
  return w;
}

FlatPerm flat_compose(const FlatPerm& u, const FlatPerm& w) {
  if (u.size() != w.size()) throw std::invalid_argument("size mismatch in compose");
  FlatPerm r(w.size());
  for (size_t p = 0; p < w.size(); ++p) r[p] = u[w[p]];
  return r;
}

FlatPerm flat_inverse(const FlatPerm& w) {
  FlatPerm r(w.size());
  for (size_t p = 0; p < w.size(); ++p) r[w[p]] = static_cast<int>(p);
  return r;
}

bool flat_is_involution(const FlatPerm& w) {
  for (size_t p = 0; p < w.size(); ++p)
    if (w[w[p]] != static_cast<int>(p)) return false;
  return true;
}

std::uint64_t flat_key(const FlatPerm& w) {
  // degree stays <= 12 and every image < 16, so 4 bits per point suffice
  std::uint64_t k = 0;
  for (size_t p = 0; p < w.size(); ++p) k |= static_cast<std::uint64_t>(w[p]) << (4 * p);
  return k;
}

std::string window_of_flat(const FlatPerm& w, GroupMode mode) {
  if (mode == GroupMode::C) return SignedPermutation::from_flat(w).window();
  std::string s = "[";
  for (size_t p = 0; p < w.size(); ++p) {
    if (p) s += ",";
    s += std::to_string(w[p] + 1);
  }
  return s + "]";
}

FlatPerm flat_of_window(const std::string& s, GroupMode mode) {
  if (mode == GroupMode::C) return SignedPermutation::parse_window(s).to_flat();
  auto w = SignedPermutation::parse_window(s);  // reuse the list parser
  FlatPerm r(w.n());
  for (int i = 1; i <= w.n(); ++i) {
    int v = w.apply(i);
    if (v < 1) throw std::invalid_argument("type A window must be positive");
    r[i - 1] = v - 1;
  }
  return r;
}

std::vector<FlatPerm> fundamental_generators(int n, GroupMode mode) {
  std::vector<FlatPerm> gens;
  if (mode == GroupMode::C) {
    for (int i = 1; i < n; ++i) gens.push_back(reflection(RootC::diff(i, i + 1), n).to_flat());
    gens.push_back(reflection(RootC::lng(n), n).to_flat());
  } else {
    for (int i = 0; i + 1 < n; ++i) {
      FlatPerm t = flat_identity(n);
      std::swap(t[i], t[i + 1]);
      gens.push_back(std::move(t));
    }
  }
  return gens;
}

std::vector<FlatPerm> all_reflections(int n, GroupMode mode) {
  std::vector<FlatPerm> refl;
  if (mode == GroupMode::C) {
    for (const auto& a : positive_roots(n)) refl.push_back(reflection(a, n).to_flat());
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        FlatPerm t = flat_identity(n);
        std::swap(t[i], t[j]);
        refl.push_back(std::move(t));
      }
  }
  return refl;
}

namespace {
// Full closure rows are kept only while size * size bits stays modest.
constexpr int kClosureThreshold = 6000;
}  // namespace

BruhatPoset BruhatPoset::build(int n, GroupMode mode, int max_n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (n > max_n) throw std::invalid_argument("rank exceeds configured bound");
  BruhatPoset ps;
  ps.n_ = n;
  ps.mode_ = mode;

  auto gens = fundamental_generators(n, mode);
  auto refl = all_reflections(n, mode);

  // BFS from the identity: enumeration order is by length
  FlatPerm id = flat_identity(mode == GroupMode::C ? 2 * n : n);
  ps.elements_.push_back(id);
  ps.index_[flat_key(id)] = 0;
  ps.lengths_.push_back(0);
  for (size_t head = 0; head < ps.elements_.size(); ++head) {
    FlatPerm w = ps.elements_[head];
    for (const auto& s : gens) {
      FlatPerm v = flat_compose(w, s);
      auto k = flat_key(v);
      if (!ps.index_.count(k)) {
        ps.index_[k] = static_cast<int>(ps.elements_.size());
        ps.elements_.push_back(std::move(v));
        ps.lengths_.push_back(ps.lengths_[head] + 1);
      }
    }
  }
  int sz = ps.size();

  // covers: right multiplication by any reflection raising length by one
  ps.up_covers_.assign(sz, {});
  std::vector<std::vector<int>> down_covers(sz);
  for (int u = 0; u < sz; ++u) {
    for (const auto& t : refl) {
      int w = ps.index_.at(flat_key(flat_compose(ps.elements_[u], t)));
      if (ps.lengths_[w] == ps.lengths_[u] + 1) {
        ps.up_covers_[u].push_back(w);
        down_covers[w].push_back(u);
      }
    }
    std::sort(ps.up_covers_[u].begin(), ps.up_covers_[u].end());
  }

  // involutions sorted by (length, window)
  std::vector<std::pair<std::pair<int, std::string>, int>> inv;
  for (int idx = 0; idx < sz; ++idx)
    if (flat_is_involution(ps.elements_[idx]))
      inv.push_back({{ps.lengths_[idx], window_of_flat(ps.elements_[idx], mode)}, idx});
  std::sort(inv.begin(), inv.end());
  ps.inv_pos_.assign(sz, -1);
  for (size_t r = 0; r < inv.size(); ++r) {
    ps.involutions_.push_back(inv[r].second);
    ps.inv_pos_[inv[r].second] = static_cast<int>(r);
  }

  // down-set closure in BFS order (every cover points down in enumeration
  // order because lengths are monotone along it)
  bool full = sz <= kClosureThreshold;
  if (full) ps.down_.assign(sz, boost::dynamic_bitset<>(sz));
  ps.down_inv_.assign(sz, boost::dynamic_bitset<>(inv.size()));
  for (int w = 0; w < sz; ++w) {
    for (int u : down_covers[w]) {
      if (full) ps.down_[w] |= ps.down_[u];
      ps.down_inv_[w] |= ps.down_inv_[u];
    }
    if (full) ps.down_[w].set(w);
    if (ps.inv_pos_[w] >= 0) ps.down_inv_[w].set(ps.inv_pos_[w]);
  }
  return ps;
}

int BruhatPoset::index_of(const FlatPerm& w) const {
  auto it = index_.find(flat_key(w));
  if (it == index_.end() || !(elements_[it->second] == w))
    throw std::invalid_argument("element not in poset");
  return it->second;
}

bool BruhatPoset::leq(int u, int w) const {
  if (u < 0 || w < 0 || u >= size() || w >= size())
    throw std::invalid_argument("element not in poset");
  if (u == w) return true;
  if (lengths_[u] >= lengths_[w]) return false;
  if (!down_.empty()) return down_[w].test(u);
  if (inv_pos_[u] >= 0) return down_inv_[w].test(inv_pos_[u]);
  // rare fallback for non-involutions in large groups: climb covers from u
  std::vector<char> seen(size(), 0);
  std::queue<int> q;
  q.push(u);
  seen[u] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == w) return true;
    for (int y : up_covers_[x])
      if (!seen[y] && lengths_[y] <= lengths_[w]) {
        seen[y] = 1;
        q.push(y);
      }
  }
  return false;
}

int length_formula(const FlatPerm& w, GroupMode mode) {
  int m = static_cast<int>(w.size());
  if (mode == GroupMode::A) {
    int inv = 0;
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) inv += w[p] > w[q];
    return inv;
  }
  // Type C, simple system e1-e2,..,2e_n.  Count positive roots sent negative:
  // a difference root e_i-e_j inverts iff the display order of the images
  // flips; e_i+e_j = e_i - e_{-j} behaves the same with -w(j); 2e_i inverts
  // iff w(i) < 0.  Display position *is* the order the count needs.
  auto sp = SignedPermutation::from_flat(w);
  int n = sp.n();
  auto dp = [&](int v) { return display_pos(v, n); };
  int total = 0;
  for (int i = 1; i <= n; ++i) {
    if (sp.apply(i) < 0) ++total;
    for (int j = i + 1; j <= n; ++j) {
      total += dp(sp.apply(i)) > dp(sp.apply(j));
      total += dp(sp.apply(i)) > dp(-sp.apply(j));
    }
  }
  return total;
}

std::vector<Involution> enumerate_involutions(int n, int max_n) {
  auto ps = BruhatPoset::build(n, GroupMode::C, max_n);
  std::vector<Involution> out;
  for (int idx : ps.involution_indices())
    out.push_back(Involution(SignedPermutation::from_flat(ps.element(idx))));
  return out;
}

}  // namespace borbit
