#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "borbit/indexing.hpp"
#include "borbit/rook.hpp"

using namespace borbit;

TEST_CASE("rook placements") {
  // [-1,2]: cycle structure 1 -> -1
  auto p = rook_placement(flat_of_window("[-1,2]", GroupMode::C), GroupMode::C);
  CHECK(p.m == 4);
  CHECK(p.rook_col == std::vector<int>{3, 1, 2, 0});
  CHECK(p.has_rook(0, 3));
  CHECK_FALSE(p.has_rook(0, 0));
  auto a = rook_placement(flat_of_window("[2,1,3]", GroupMode::A), GroupMode::A);
  CHECK(a.m == 3);
  CHECK(a.rook_col == std::vector<int>{1, 0, 2});
}

TEST_CASE("rank table of the one dimensional identity") {
  auto t = rank_tables(rook_placement(flat_of_window("[1]", GroupMode::C), GroupMode::C));
  CHECK(t.m == 2);
  // south-west counts: the bottom-left box sees no rook, the full board two
  CHECK(t.full_at(0, 0) == 1);
  CHECK(t.full_at(0, 1) == 2);
  CHECK(t.full_at(1, 0) == 0);
  CHECK(t.full_at(1, 1) == 1);
  // strictly lower truncation vanishes entirely
  CHECK(t.lower == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("rank table of the one dimensional sign change") {
  auto t = rank_tables(rook_placement(flat_of_window("[-1]", GroupMode::C), GroupMode::C));
  CHECK(t.full == std::vector<int>{1, 2, 1, 1});
  CHECK(t.lower == std::vector<int>{0, 0, 1, 0});
}

TEST_CASE("frozen figure placements") {
  // support {e1-e4, 2e2} at n=4
  auto flat = flat_of_window("[4,-2,3,1]", GroupMode::C);
  auto p = rook_placement(flat, GroupMode::C);
  const std::vector<std::pair<int, int>> rooks = {{1, 4},   {2, -2}, {3, 3},  {4, 1},
                                                  {-4, -1}, {-3, -3}, {-2, 2}, {-1, -4}};
  for (const auto& [r, c] : rooks) CHECK(p.has_rook(display_pos(r, 4), display_pos(c, 4)));
  // R*_{-1,1} = 0: no rook strictly south-west of the bottom-left box but on
  // the main diagonal boundary rows
  auto t = rank_tables(p);
  CHECK(t.lower_at(display_pos(-1, 4), display_pos(1, 4)) == 0);
  CHECK(t.full_at(display_pos(-1, 4), display_pos(1, 4)) == 0);

  // type A figure: support {e1-e4, e3-e5} in S_6
  auto pa = rook_placement(flat_of_window("[4,2,5,1,3,6]", GroupMode::A), GroupMode::A);
  const std::vector<std::pair<int, int>> rooks_a = {{1, 4}, {2, 2}, {3, 5},
                                                    {4, 1}, {5, 3}, {6, 6}};
  for (const auto& [r, c] : rooks_a) CHECK(pa.has_rook(r - 1, c - 1));
}

TEST_CASE("entrywise comparison") {
  CHECK(entrywise_leq({0, 1, 2}, {0, 1, 2}));
  CHECK(entrywise_leq({0, 1, 1}, {0, 1, 2}));
  CHECK_FALSE(entrywise_leq({1, 0}, {0, 1}));
  CHECK_THROWS(entrywise_leq({0}, {0, 1}));
}

TEST_CASE("rank tables pass their internal cross check everywhere") {
  // rank_tables throws if the prefix recurrence and the submatrix ranks split
  for (int n = 1; n <= 3; ++n) {
    auto poset = BruhatPoset::build(n, GroupMode::C);
    for (int idx : poset.involution_indices())
      rank_tables(rook_placement(poset.element(idx), GroupMode::C));
  }
  for (int n = 2; n <= 4; ++n) {
    auto poset = BruhatPoset::build(n, GroupMode::A);
    for (int idx : poset.involution_indices())
      rank_tables(rook_placement(poset.element(idx), GroupMode::A));
  }
}

TEST_CASE("distinct involutions have distinct lower tables") {
  auto poset = BruhatPoset::build(3, GroupMode::C);
  const auto& inv = poset.involution_indices();
  std::vector<RankTables> tables;
  for (int idx : inv) tables.push_back(rank_tables(rook_placement(poset.element(idx), GroupMode::C)));
  for (size_t a = 0; a < inv.size(); ++a)
    for (size_t b = 0; b < inv.size(); ++b) {
      if (a == b) continue;
      // antisymmetry of the R* order
      if (entrywise_leq(tables[a].lower, tables[b].lower) &&
          entrywise_leq(tables[b].lower, tables[a].lower))
        CHECK(a == b);
    }
}

TEST_CASE("order equivalence on small ranks") {
  for (int n = 1; n <= 3; ++n) {
    auto poset = BruhatPoset::build(n, GroupMode::C);
    auto rep = verify_equivalences(poset);
    long cnt = static_cast<long>(poset.involution_indices().size());
    CHECK(rep.pairs == cnt * cnt);
    CHECK(rep.mismatches == 0);
    CHECK(rep.counterexamples.empty());
  }
  for (int n = 1; n <= 4; ++n) {
    auto poset = BruhatPoset::build(n, GroupMode::A);
    auto rep = verify_equivalences(poset);
    CHECK(rep.mismatches == 0);
  }
}

TEST_CASE("pair table agrees with the order oracle") {
  auto poset = BruhatPoset::build(2, GroupMode::C);
  auto rep = verify_equivalences(poset, true);
  const auto& inv = poset.involution_indices();
  REQUIRE(rep.table.size() == inv.size() * inv.size());
  for (const auto& v : rep.table) {
    CHECK(v.bruhat == poset.leq(inv[v.a], inv[v.b]));
    CHECK(v.consistent());
  }
}

TEST_CASE("equivalence csv export") {
  auto poset = BruhatPoset::build(2, GroupMode::C);
  auto rep = verify_equivalences(poset, true);
  auto csv = equivalence_csv(rep, poset);
  CHECK(csv == equivalence_csv(rep, poset));
  CHECK(csv.rfind("sigma,tau,bruhat,rank_leq,lower_rank_leq\n", 0) == 0);
  CHECK(csv.find("\"[1,2]\",\"[1,2]\",1,1,1") != std::string::npos);
  long lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == rep.pairs + 1);
  auto bare = verify_equivalences(poset);
  CHECK_THROWS(equivalence_csv(bare, poset));
}

TEST_CASE("involution subposet structure") {
  auto p1 = involution_poset(BruhatPoset::build(1, GroupMode::C));
  CHECK(p1.size() == 2);
  CHECK(p1.windows == std::vector<std::string>{"[1]", "[-1]"});
  CHECK(p1.lengths == std::vector<int>{0, 1});
  CHECK(p1.cover_edges == std::vector<std::pair<int, int>>{{0, 1}});

  auto poset = BruhatPoset::build(2, GroupMode::C);
  auto p2 = involution_poset(poset);
  CHECK(p2.size() == 6);
  // covers = transitive reduction of the restricted order, by betweenness
  std::vector<std::pair<int, int>> want;
  for (int s = 0; s < p2.size(); ++s)
    for (int t = 0; t < p2.size(); ++t) {
      if (s == t || !p2.leq(s, t)) continue;
      bool between = false;
      for (int z = 0; z < p2.size() && !between; ++z)
        if (z != s && z != t && p2.leq(s, z) && p2.leq(z, t)) between = true;
      if (!between) want.emplace_back(s, t);
    }
  auto got = p2.cover_edges;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  // every non-extremal node is covered both ways
  for (int s = 0; s < p2.size(); ++s) {
    bool has_up = false, has_down = false;
    for (const auto& [x, y] : p2.cover_edges) {
      if (x == s) has_up = true;
      if (y == s) has_down = true;
    }
    if (p2.lengths[s] > 0) CHECK(has_down);
    if (p2.lengths[s] < 4) CHECK(has_up);
  }
}

TEST_CASE("saturated chains reach the top at rank three") {
  auto p = involution_poset(BruhatPoset::build(3, GroupMode::C));
  // walk greedily upward from the bottom along covers
  int cur = 0;
  CHECK(p.lengths[0] == 0);
  int steps = 0;
  for (;;) {
    int next = -1;
    for (const auto& [s, t] : p.cover_edges)
      if (s == cur) { next = t; break; }
    if (next < 0) break;
    // cover edges in the involution order can jump length by more than one
    CHECK(p.lengths[next] > p.lengths[cur]);
    cur = next;
    ++steps;
  }
  CHECK(p.lengths[cur] == 9);  // reached the longest involution -id
  CHECK(steps >= 1);
}

TEST_CASE("hasse exports are deterministic and well formed") {
  auto p = involution_poset(BruhatPoset::build(2, GroupMode::C));
  auto dot = hasse_dot(p);
  CHECK(dot == hasse_dot(p));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("[-1,-2]") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') >= static_cast<long>(p.cover_edges.size()));

  auto js = hasse_json(p);
  CHECK(js["n"] == 2);
  CHECK(js["mode"] == "C");
  CHECK(js["elements"].size() == 6);
  for (const auto& e : js["covers"]) {
    CHECK(e.size() == 2);
    CHECK(e[0].get<int>() >= 0);
    CHECK(e[0].get<int>() < 6);
    CHECK(e[1].get<int>() >= 0);
    CHECK(e[1].get<int>() < 6);
  }
  CHECK(js.dump() == hasse_json(p).dump());
}
