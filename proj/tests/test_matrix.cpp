#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "borbit/indexed_matrix.hpp"
#include "borbit/orbit.hpp"
#include "borbit/rank.hpp"

using namespace borbit;

namespace {

// independent rank oracle: plain rational Gaussian elimination
int gauss_rank(std::vector<std::vector<Rat>> a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[rank][c];
      for (size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

IndexedMatrix<Rat> random_matrix(int n, std::mt19937_64& rng) {
  IndexedMatrix<Rat> m(n);
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      m.at_display(r, c) = Rat(static_cast<int>(rng() % 11) - 5);
  return m;
}

}  // namespace

TEST_CASE("signed indexing") {
  IndexedMatrix<Rat> m(2);
  m.at(1, -1) = Rat(7);
  CHECK(m.at_display(0, 3) == Rat(7));
  m.at(-2, 2) = Rat(5);
  CHECK(m.at_display(2, 1) == Rat(5));
  CHECK(IndexedMatrix<Rat>::identity(2).at(-1, -1) == Rat(1));
  CHECK_THROWS(IndexedMatrix<Rat>(0));
}

TEST_CASE("symplectic form") {
  auto j = symplectic_form<Rat>(2);
  CHECK(j.at(1, -1) == Rat(1));
  CHECK(j.at(2, -2) == Rat(1));
  CHECK(j.at(-1, 1) == Rat(-1));
  CHECK(j.at(-2, 2) == Rat(-1));
  CHECK(j.at(1, 1) == Rat(0));
  // J^2 = -I
  CHECK(j * j == Rat(-1) * IndexedMatrix<Rat>::identity(2));
  CHECK(is_symplectic_algebra(j));
  CHECK(is_symplectic_group(IndexedMatrix<Rat>::identity(3)));
}

TEST_CASE("root space basis lies in the algebra") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : positive_roots(n)) {
      auto e = root_basis<Rat>(a, n);
      CHECK(is_symplectic_algebra(e));
      CHECK(is_symplectic_algebra(e.transpose()));
      CHECK((e * e).is_zero());
      CHECK(is_upper_triangular(e));
      CHECK(is_strictly_lower(e.transpose()));
    }
}

TEST_CASE("unipotent generators lie in the group") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& a : positive_roots(n)) {
      auto x = chevalley_x<Rat>(a, Rat(5), n);
      CHECK(is_symplectic_group(x.g));
      CHECK(x.g * x.g_inv == IndexedMatrix<Rat>::identity(n));
    }
}

TEST_CASE("root space products") {
  // e_{e1-e2} e_{e1+e2} = E_{1,-1}
  auto prod = root_basis<Rat>(RootC::diff(1, 2), 2) * root_basis<Rat>(RootC::sum(1, 2), 2);
  IndexedMatrix<Rat> want(2);
  want.at(1, -1) = Rat(1);
  CHECK(prod == want);
}

TEST_CASE("lower projection") {
  auto e = root_basis<Rat>(RootC::diff(1, 2), 2);
  CHECK((e + e.transpose()).lower_projection() == e.transpose());
  CHECK(e.lower_projection().is_zero());
  CHECK(IndexedMatrix<Rat>::identity(2).lower_projection().is_zero());
}

TEST_CASE("matrix algebra on seeded samples") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_matrix(2, rng), b = random_matrix(2, rng), c = random_matrix(2, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(a + b == b + a);
    CHECK(a - a == IndexedMatrix<Rat>(2));
  }
}

TEST_CASE("laurent matrix limits") {
  IndexedMatrix<Laurent> m(2);
  m.at(-1, 2) = Laurent::monomial(Rat(1), -1);
  try {
    limit_at_zero(m);
    CHECK(false);
  } catch (const NegativeExponentError& e) {
    CHECK(e.row == -1);
    CHECK(e.col == 2);
    CHECK(e.min_exponent == -1);
  }
  std::mt19937_64 rng(3);
  auto r = random_matrix(2, rng);
  CHECK(limit_at_zero(lift_to_laurent(r)) == r);
}

TEST_CASE("bareiss rank basics") {
  CHECK(bareiss_rank({{Int(0), Int(0)}, {Int(0), Int(0)}, {Int(0), Int(0)}}) == 0);
  CHECK(bareiss_rank({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
  CHECK(bareiss_rank({{Int(1), Int(0), Int(0)},
                      {Int(0), Int(1), Int(0)},
                      {Int(0), Int(0), Int(1)}}) == 3);
  CHECK(rank_exact(IndexedMatrix<Rat>::identity(3)) == 6);
  CHECK(rank_exact(IndexedMatrix<Rat>(3)) == 0);
}

TEST_CASE("bareiss rank against gaussian oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = 8, cols = 8;
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    std::vector<std::vector<Rat>> q(rows, std::vector<Rat>(cols));
    std::vector<std::vector<Rat>> qt(cols, std::vector<Rat>(rows));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        int v = static_cast<int>(rng() % 7) - 3;
        a[r][c] = v;
        q[r][c] = v;
        qt[c][r] = v;
      }
    int want = gauss_rank(q);
    CHECK(bareiss_rank(a) == want);
    CHECK(rank_of_rows(q) == want);
    CHECK(rank_of_rows(qt) == want);  // rank(A) = rank(A^T)
  }
}

TEST_CASE("rank of rational rows with denominators") {
  // scaling a row must not change the rank
  std::vector<std::vector<Rat>> rows = {{Rat(1) / Rat(2), Rat(1) / Rat(3)},
                                        {Rat(3), Rat(2)}};
  CHECK(rank_of_rows(rows) == 1);
}

TEST_CASE("south west region rank") {
  IndexedMatrix<Rat> m(2);
  m.at(-1, 1) = Rat(1);
  CHECK(sw_region_rank(m, -1, 1) == 1);
  CHECK(sw_region_rank(m, -1, 2) == 1);
  CHECK(sw_region_rank(m, 1, 1) == 1);
  CHECK(sw_region_rank(m, -2, 1) == 1);
  CHECK(sw_region_rank(m, -1, -2) == 1);
  m.at(-2, 2) = Rat(4);
  CHECK(sw_region_rank(m, -2, 2) == 2);
  CHECK(sw_region_rank(m, -1, 2) == 1);
  CHECK(sw_region_rank(IndexedMatrix<Rat>(2), -2, -1) == 0);
}

TEST_CASE("pretty printer is deterministic") {
  auto j = symplectic_form<Rat>(2);
  CHECK(matrix_str(j) == matrix_str(j));
  CHECK(matrix_str(j).find("-2") != std::string::npos);
}
