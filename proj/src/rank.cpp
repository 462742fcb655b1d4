#include "borbit/rank.hpp"

#include <utility>

namespace borbit {

int bareiss_rank(std::vector<std::vector<Int>> a) {
  if (a.empty()) return 0;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int rank = 0;
  Int prev(1);
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;  // column already eliminated; pivot divisor unchanged
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        Int t = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        a[r][c] = t / prev;  // exact by the Bareiss minor identity
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

int rank_of_rows(const std::vector<std::vector<Rat>>& rows) {
  std::vector<std::vector<Int>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    Int lcm(1);
    for (const auto& v : row) {
      Int d = denominator(v);
      lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<Int> out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(numerator(v) * (lcm / denominator(v)));
    a.push_back(std::move(out));
  }
  return bareiss_rank(std::move(a));
}

int rank_exact(const IndexedMatrix<Rat>& m) {
  std::vector<std::vector<Rat>> rows(m.dim(), std::vector<Rat>(m.dim()));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) rows[r][c] = m.at_display(r, c);
  return rank_of_rows(rows);
}

int sw_region_rank(const IndexedMatrix<Rat>& m, int i, int j) {
  int n = m.n();
  if (!valid_signed_index(i, n) || !valid_signed_index(j, n))
    throw std::invalid_argument("invalid signed index");
  int r0 = display_pos(i, n), c1 = display_pos(j, n);
  std::vector<std::vector<Rat>> rows;
  for (int r = r0; r < m.dim(); ++r) {
    std::vector<Rat> row;
    row.reserve(c1 + 1);
    for (int c = 0; c <= c1; ++c) row.push_back(m.at_display(r, c));
    rows.push_back(std::move(row));
  }
  return rank_of_rows(rows);
}

}  // namespace borbit
