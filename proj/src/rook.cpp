#include "borbit/rook.hpp"

#include <sstream>
#include <stdexcept>

#include "borbit/rank.hpp"

namespace borbit {

RookPlacement rook_placement(const FlatPerm& w, GroupMode mode) {
  RookPlacement p;
  p.m = static_cast<int>(w.size());
  p.mode = mode;
  p.rook_col = w;
  if (mode == GroupMode::C) SignedPermutation::from_flat(w);  // validates symmetry
  return p;
}

RankTables rank_tables(const RookPlacement& p) {
  int m = p.m;
  RankTables t;
  t.m = m;
  t.full.assign(static_cast<size_t>(m) * m, 0);
  t.lower.assign(static_cast<size_t>(m) * m, 0);

  // south-west rook counts, accumulated bottom-up / left-to-right
  for (int r = m - 1; r >= 0; --r)
    for (int c = 0; c < m; ++c) {
      int acc = (p.rook_col[r] == c ? 1 : 0);
      if (r + 1 < m) acc += t.full[static_cast<size_t>(r + 1) * m + c];
      if (c > 0) acc += t.full[static_cast<size_t>(r) * m + c - 1];
      if (r + 1 < m && c > 0) acc -= t.full[static_cast<size_t>(r + 1) * m + c - 1];
      t.full[static_cast<size_t>(r) * m + c] = acc;
    }

  // independent definition: rank of the south-west submatrix
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      std::vector<std::vector<Int>> sub;
      for (int rr = r; rr < m; ++rr) {
        std::vector<Int> row(c + 1, Int(0));
        if (p.rook_col[rr] <= c) row[p.rook_col[rr]] = 1;
        sub.push_back(std::move(row));
      }
      if (bareiss_rank(std::move(sub)) != t.full_at(r, c))
        throw std::logic_error("rank table definitions disagree");
    }

  for (int r = 0; r < m; ++r)
    for (int c = 0; c < r; ++c) t.lower[static_cast<size_t>(r) * m + c] = t.full_at(r, c);
  return t;
}

bool entrywise_leq(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("table size mismatch");
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

EquivalenceReport verify_equivalences(const BruhatPoset& poset, bool keep_table) {
  EquivalenceReport rep;
  rep.n = poset.n();
  rep.mode = poset.mode();
  const auto& inv = poset.involution_indices();
  int k = static_cast<int>(inv.size());

  std::vector<RankTables> tables;
  tables.reserve(k);
  for (int r = 0; r < k; ++r)
    tables.push_back(rank_tables(rook_placement(poset.element(inv[r]), poset.mode())));

  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      PairVerdict v;
      v.a = a;
      v.b = b;
      v.bruhat = poset.leq(inv[a], inv[b]);
      v.rank_full = entrywise_leq(tables[a].full, tables[b].full);
      v.rank_lower = entrywise_leq(tables[a].lower, tables[b].lower);
      ++rep.pairs;
      if (!v.consistent()) {
        ++rep.mismatches;
        if (rep.counterexamples.size() < 32) rep.counterexamples.push_back(v);
      }
      if (keep_table) rep.table.push_back(v);
    }
  return rep;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string equivalence_csv(const EquivalenceReport& rep, const BruhatPoset& poset) {
  if (rep.table.empty() && rep.pairs > 0)
    throw std::invalid_argument("report was built without keep_table");
  const auto& inv = poset.involution_indices();
  std::ostringstream os;
  os << "sigma,tau,bruhat,rank_leq,lower_rank_leq\n";
  for (const auto& v : rep.table)
    os << csv_quote(window_of_flat(poset.element(inv[v.a]), poset.mode())) << ","
       << csv_quote(window_of_flat(poset.element(inv[v.b]), poset.mode())) << "," << v.bruhat
       << "," << v.rank_full << "," << v.rank_lower << "\n";
  return os.str();
}

InvolutionPoset involution_poset(const BruhatPoset& poset) {
  InvolutionPoset p;
  p.n = poset.n();
  p.mode = poset.mode();
  const auto& inv = poset.involution_indices();
  int k = static_cast<int>(inv.size());
  for (int r = 0; r < k; ++r) {
    p.windows.push_back(window_of_flat(poset.element(inv[r]), poset.mode()));
    p.lengths.push_back(poset.length(inv[r]));
  }
  p.down.reserve(k);
  for (int r = 0; r < k; ++r) p.down.push_back(poset.involution_downset(inv[r]));

  // up-sets = transposed down-sets; covers are the pairs with nothing between
  std::vector<boost::dynamic_bitset<>> up(k, boost::dynamic_bitset<>(k));
  for (int t = 0; t < k; ++t)
    for (int s = 0; s < k; ++s)
      if (p.down[t].test(s)) up[s].set(t);
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t) {
      if (s == t || !p.down[t].test(s)) continue;
      auto between = p.down[t] & up[s];
      if (between.count() == 2) p.cover_edges.emplace_back(s, t);  // only s and t
    }
  return p;
}

std::string hasse_dot(const InvolutionPoset& p) {
  std::ostringstream os;
  os << "digraph involutions {\n  rankdir=BT;\n";
  for (int r = 0; r < p.size(); ++r)
    os << "  \"" << p.windows[r] << "\" [label=\"" << p.windows[r] << "\\nlen "
       << p.lengths[r] << "\"];\n";
  for (const auto& [s, t] : p.cover_edges)
    os << "  \"" << p.windows[s] << "\" -> \"" << p.windows[t] << "\";\n";
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json hasse_json(const InvolutionPoset& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["mode"] = mode_str(p.mode);
  nlohmann::ordered_json els = nlohmann::ordered_json::array();
  for (int r = 0; r < p.size(); ++r)
    els.push_back({{"window", p.windows[r]}, {"length", p.lengths[r]}});
  j["elements"] = els;
  nlohmann::ordered_json cov = nlohmann::ordered_json::array();
  for (const auto& [s, t] : p.cover_edges) cov.push_back({s, t});
  j["covers"] = cov;
  return j;
}

}  // namespace borbit
