#pragma once

#include <vector>

#include "borbit/indexed_matrix.hpp"
#include "borbit/rational.hpp"

namespace borbit {

// Fraction-free (Bareiss) rank of a rectangular integer matrix.  Row and
// column pivoting keeps every intermediate entry a minor of the input, so the
// interior divisions stay exact and coefficients cannot blow up.
int bareiss_rank(std::vector<std::vector<Int>> a);

// Rank of a rectangular rational matrix: rows are scaled integral (rank is
// unchanged), then eliminated fraction-free.
int rank_of_rows(const std::vector<std::vector<Rat>>& rows);

int rank_exact(const IndexedMatrix<Rat>& m);

// Rank of the submatrix with rows i..-1 and columns 1..j (signed indices,
// both ranges in display order).
int sw_region_rank(const IndexedMatrix<Rat>& m, int i, int j);

}  // namespace borbit
