#include "lamagic/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "lamagic/designs.hpp"

namespace lamagic {

namespace {

IntMatrix add(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix z(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) z.at(i, j) = x.at(i, j) + y.at(i, j);
  return z;
}

// Move entry 1 to the top-left corner by one row and one column swap,
// subtract 1 everywhere, blank (1,1). Sum multisets are preserved.
IntMatrix to_blanked(IntMatrix a) {
  int r1 = -1, c1 = -1;
  for (int i = 0; i < a.rows() && r1 < 0; ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) == 1) {
        r1 = i;
        c1 = j;
        break;
      }
  if (r1 < 0) throw std::invalid_argument("array has no entry 1");
  if (r1 != 0)
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(0, j), a.at(r1, j));
  if (c1 != 0)
    for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, 0), a.at(i, c1));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= 1;
  a.set_blank(0, 0);
  return a;
}

}  // namespace

IntMatrix shift_scale(const IntMatrix& m, int r) {
  if (r < 1) throw std::invalid_argument("scale factor must be positive");
  IntMatrix w(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) w.at(i, j) = r * (m.at(i, j) - 1);
  return w;
}

IntMatrix circulant_lift(const std::vector<int>& column, int n, int r) {
  const int m = static_cast<int>(column.size());
  if (m < 1 || n < m) throw std::invalid_argument("lift width must cover the column");
  if ((n - m) % 2 != 0)
    throw std::invalid_argument("lift extension needs an even number of extra columns");
  for (int v : column)
    if (v < 1 || v > r) throw std::invalid_argument("column entries must lie in 1..r");
  IntMatrix u(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) u.at(i, j) = column[(i + j) % m];
  for (int j = m; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      // columns past the circulant alternate: copy of column one, then
      // the (r+1)-complement of the previous column
      u.at(i, j) = (j - m) % 2 == 0 ? column[i] : r + 1 - u.at(i, j - 1);
    }
  }
  return u;
}

MatrixFamily build_zt_family_bipartite(int m, int n, int r) {
  if (!(m > 1 && m < n && m % 2 == 1 && n % 2 == 1 && r >= 2 && r % 2 == 0))
    throw std::invalid_argument(
        "bipartite family needs odd 1 < m < n and even r >= 2");
  const IntMatrix w = shift_scale(magic_rectangle(m, n), r);
  const KotzigMatrix q = quasi_kotzig_array(m, r);

  MatrixFamily fam;
  fam.recipe = {"T22", m, n, r, {}};
  const long long mn = static_cast<long long>(m) * n;
  const long long rho2 = (r * n * mn + n + 1) / 2;
  const long long rho1 = rho2 - 1;
  const long long qlo = (static_cast<long long>(m) * (r + 1) - 1) / 2;
  const long long wcol = static_cast<long long>(r) * m * (mn - 1) / 2;

  for (int t = 0; t < r; ++t) {
    std::vector<int> column(m);
    for (int i = 0; i < m; ++i) column[i] = q.mat.at(i, t);
    fam.copies.push_back(add(w, circulant_lift(column, n, r)));

    const bool low = t < r / 2;
    for (int i = 0; i < m; ++i) fam.claimed_row_sums.push_back(low ? rho1 : rho2);
    const long long qt = low ? qlo : qlo + 1;
    const long long qother = m * static_cast<long long>(r + 1) - qt;
    for (int j = 0; j < n; ++j) {
      const bool copies_col1 = j < m || (j - m) % 2 == 0;
      fam.claimed_col_sums.push_back(wcol + (copies_col1 ? qt : qother));
    }
  }
  return fam;
}

MatrixFamily build_zt_family_glued(int m, int r) {
  if (!(m >= 4 && m % 2 == 0 && r >= 1))
    throw std::invalid_argument("glued family needs even m >= 4 and r >= 1");
  const auto left = magic_rectangle_set(m, 2, r);
  auto right = magic_rectangle_set(m, m - 2, r);
  const int shift = 2 * r * m;
  MatrixFamily fam;
  fam.recipe = {"T23", m, m, r, {}};
  const long long rho1 = static_cast<long long>(m) * (static_cast<long long>(r) * m * m + 1) / 2;
  const long long sigma1 = static_cast<long long>(m) * (2LL * r * m + 1) / 2;
  const long long sigma2 = rho1 + static_cast<long long>(r) * m * m;
  for (int t = 0; t < r; ++t) {
    IntMatrix z(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < 2; ++j) z.at(i, j) = left[t].at(i, j);
      for (int j = 0; j < m - 2; ++j) z.at(i, j + 2) = right[t].at(i, j) + shift;
    }
    fam.copies.push_back(std::move(z));
    for (int i = 0; i < m; ++i) fam.claimed_row_sums.push_back(rho1);
    for (int j = 0; j < m; ++j) fam.claimed_col_sums.push_back(j < 2 ? sigma1 : sigma2);
  }
  return fam;
}

IntMatrix modify_mstar(const IntMatrix& siamese) {
  const int m = siamese.rows();
  if (m != siamese.cols() || m % 2 == 0)
    throw std::invalid_argument("expected an odd square");
  const int mid = m / 2;
  for (int i = 0; i < m; ++i)
    if (siamese.at(i, mid) != 1 + i * (m + 1))
      throw std::invalid_argument(
          "centre column is not the expected progression; not a Siamese square");
  IntMatrix out = siamese;
  for (int i = 0; i < m; ++i) out.at(i, mid) = siamese.at((i + 1) % m, mid);
  return out;
}

MatrixFamily build_zt_family_square(int m, int r) {
  if (!(m >= 3 && m % 2 == 1 && r >= 1))
    throw std::invalid_argument("square family needs odd m >= 3 and r >= 1");
  const IntMatrix w = shift_scale(modify_mstar(siamese_magic_square(m)), r);
  const KotzigMatrix k = r % 2 == 1 ? kotzig_array(m, r) : quasi_kotzig_array(m, r);
  const auto wrows = w.row_sums();
  const auto wcols = w.col_sums();

  MatrixFamily fam;
  fam.recipe = {r % 2 == 1 ? "T24" : "T25", m, m, r, {}};
  for (int t = 0; t < r; ++t) {
    std::vector<int> column(m);
    long long colsum = 0;
    for (int i = 0; i < m; ++i) {
      column[i] = k.mat.at(i, t);
      colsum += column[i];
    }
    fam.copies.push_back(add(w, circulant_lift(column, m, r)));
    // the circulant makes every row and column of U^t a permutation of
    // the Kotzig column, so each contributes the same column sum
    for (int i = 0; i < m; ++i) fam.claimed_row_sums.push_back(wrows[i] + colsum);
    for (int j = 0; j < m; ++j) fam.claimed_col_sums.push_back(wcols[j] + colsum);
  }
  return fam;
}

MatrixFamily build_mrs_family(int m, int n, int r) {
  if (m == n) throw std::invalid_argument("equal sides give equal row and column sums");
  auto copies = magic_rectangle_set(m, n, r);  // throws NonexistentDesign
  MatrixFamily fam;
  fam.recipe = {"T21", m, n, r, {}};
  fam.copies = std::move(copies);
  const long long total = static_cast<long long>(m) * n * r + 1;
  for (int t = 0; t < r; ++t) {
    for (int i = 0; i < m; ++i) fam.claimed_row_sums.push_back(n * total / 2);
    for (int j = 0; j < n; ++j) fam.claimed_col_sums.push_back(m * total / 2);
  }
  return fam;
}

MatrixFamily build_nmr_single(int m, int n) {
  if (!(m > 1 && n > 1 && (m % 2) != (n % 2)))
    throw std::invalid_argument("single near-magic labeling needs mixed parity, m,n > 1");
  const IntMatrix nm = (m % 2 == 0) ? nearly_magic_rectangle(m, n)
                                    : nearly_magic_rectangle(n, m).transposed();
  MatrixFamily fam;
  fam.recipe = {"NMR1", m, n, 1, {}};
  for (auto s : nm.row_sums()) fam.claimed_row_sums.push_back(s);
  for (auto s : nm.col_sums()) fam.claimed_col_sums.push_back(s);
  fam.copies.push_back(nm);
  return fam;
}

BlankedMatrix build_b_same_parity(int m, int n) {
  if (!(m >= 2 && n >= 2 && m != n && (m % 2) == (n % 2)))
    throw std::invalid_argument("needs m,n >= 2 of equal parity, m != n");
  BlankedMatrix b;
  b.matrix = to_blanked(magic_rectangle(m + 1, n + 1));
  b.recipe = {"P1", m, n, 1, {}};
  return b;
}

BlankedMatrix build_b_mixed_parity(int m, int n) {
  if (!(m >= 2 && n >= 2 && (m % 2) != (n % 2)))
    throw std::invalid_argument("needs m,n >= 2 of mixed parity");
  IntMatrix nm = (m % 2 == 1) ? nearly_magic_rectangle(m + 1, n + 1)
                              : nearly_magic_rectangle(n + 1, m + 1).transposed();
  BlankedMatrix b;
  b.matrix = to_blanked(std::move(nm));
  b.recipe = {"P2", m, n, 1, {}};
  return b;
}

BlankedMatrix build_b_odd_square(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("needs odd n >= 3");
  const int s = (n + 1) / 2;
  const int p = n + 1;
  IntMatrix a(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      // row pattern i, 4s+1-i, 4s+i, 8s+1-i, ... in 1-based terms
      a.at(i, j) = j % 2 == 0 ? 4 * s * (j / 2) + i + 1 : 4 * s * ((j + 1) / 2) - i;
    }
  }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) a.at(i, j) -= 1;
  // swap column pairs (j, n+3-j) in the first s rows; the middle column
  // and column one stay put
  for (int j = 2; j <= s; ++j)
    for (int i = 0; i < s; ++i) std::swap(a.at(i, j - 1), a.at(i, n + 2 - j));
  a.set_blank(0, 0);
  BlankedMatrix b;
  b.matrix = std::move(a);
  b.recipe = {"P3", n, n, 1, {"row-sum constant derived from the total-sum identity"}};
  return b;
}

BlankedMatrix build_b_even_square(int m) {
  if (m < 2 || m % 2 == 1) throw std::invalid_argument("needs even m >= 2");
  const int p = m + 1;
  IntMatrix a = odd_magic_square(p, SquareVariant::N3);
  for (int j = 2; j <= p - 1; j += 2) {
    const int d = a.at(0, j - 1) - a.at(0, j);
    if (d != p - 1 && d != -(p - 1))
      throw std::logic_error("first-row swap pair does not differ by p-1");
    std::swap(a.at(0, j - 1), a.at(0, j));
  }
  if (a.at(0, 0) != 1) throw std::logic_error("square variant does not start at 1");
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) a.at(i, j) -= 1;
  a.set_blank(0, 0);
  BlankedMatrix b;
  b.matrix = std::move(a);
  b.recipe = {"P4", m, m, 1, {}};
  return b;
}

}  // namespace lamagic
