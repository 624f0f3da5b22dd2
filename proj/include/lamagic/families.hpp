#pragma once

#include <string>
#include <vector>

#include "lamagic/matrix.hpp"

namespace lamagic {

/// Dispatch record naming the construction that produced a family.
struct BuildRecipe {
  std::string theorem;  // T21..T25, P1..P4, NMR1
  int m = 0;
  int n = 0;
  int r = 0;
  std::vector<std::string> notes;
};

/// r same-shape matrices whose entries jointly cover 1..r*m*n, with the
/// row/column sum multisets the construction claims (flattened per copy,
/// in order). Observed sums must realize the claims exactly.
struct MatrixFamily {
  std::vector<IntMatrix> copies;
  std::vector<long long> claimed_row_sums;
  std::vector<long long> claimed_col_sums;
  BuildRecipe recipe;
};

/// (m+1) x (n+1) array with the top-left cell blanked; the remaining
/// entries are exactly 1..(m+1)(n+1)-1. Encodes an edge labeling of a
/// three-partition graph with a single apex vertex.
struct BlankedMatrix {
  IntMatrix matrix;
  BuildRecipe recipe;
};

/// Entrywise r*(m_ij - 1).
IntMatrix shift_scale(const IntMatrix& m, int r);

/// m x n matrix whose first m columns are the cyclic circulant of the
/// given column; later columns alternate copies of column one with
/// entrywise (r+1)-complements of their left neighbour.
IntMatrix circulant_lift(const std::vector<int>& column, int n, int r);

MatrixFamily build_zt_family_bipartite(int m, int n, int r);
MatrixFamily build_zt_family_glued(int m, int r);
MatrixFamily build_zt_family_square(int m, int r);
MatrixFamily build_mrs_family(int m, int n, int r);
MatrixFamily build_nmr_single(int m, int n);

/// Cyclic up-shift of the centre column of a Siamese square; keeps all
/// column sums, leaves the last row deficient.
IntMatrix modify_mstar(const IntMatrix& siamese);

BlankedMatrix build_b_same_parity(int m, int n);
BlankedMatrix build_b_mixed_parity(int m, int n);
BlankedMatrix build_b_odd_square(int n);
BlankedMatrix build_b_even_square(int m);

}  // namespace lamagic
