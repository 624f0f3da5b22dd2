#include "lamagic/designs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lamagic/families.hpp"
#include "lamagic/solver.hpp"

namespace lamagic {

namespace {

std::string shape_str(int a, int b, int c = 0) {
  std::ostringstream os;
  os << "(" << a << "," << b;
  if (c > 0) os << ";" << c;
  os << ")";
  return os.str();
}

int smallest_odd_factor(int n) {
  for (int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return d;
  return n;
}

// 2 x b magic rectangle, b even: columns are complementary pairs
// (j, 2b+1-j); a flip set of pair indices balances the two rows.
IntMatrix mr_two_rows(int b) {
  const int k = b / 2;
  // Need flip deltas (odd numbers 2b+1-2j) summing to b^2/2 = 2k^2.
  std::vector<char> flip_delta(2 * b, 0);  // index by delta value
  if (k % 2 == 0) {
    for (int s = 0; s <= k / 2 - 1; ++s) {
      flip_delta[2 * s + 1] = 1;
      flip_delta[4 * k - 1 - 2 * s] = 1;
    }
  } else {
    for (int s = 1; s <= (k - 1) / 2; ++s) {
      flip_delta[2 * s + 1] = 1;
      flip_delta[4 * k - 1 - 2 * s] = 1;
    }
    flip_delta[1] = 1;
    flip_delta[2 * k - 1] = 1;
  }
  IntMatrix m(2, b);
  for (int j = 1; j <= b; ++j) {
    const int delta = 2 * b + 1 - 2 * j;
    const bool flip = flip_delta[delta];
    m.at(0, j - 1) = flip ? 2 * b + 1 - j : j;
    m.at(1, j - 1) = flip ? j : 2 * b + 1 - j;
  }
  return m;
}

// 2 x b nearly magic rectangle, b odd: complementary-pair columns; the
// flip set comes from an exact subset-sum over the odd deltas.
IntMatrix nmr_two_rows(int b) {
  const long long target = (static_cast<long long>(b) * b - 1) / 2;
  // DP over distinct odd deltas 1,3,...,2b-1.
  std::vector<int> deltas(b);
  for (int i = 0; i < b; ++i) deltas[i] = 2 * i + 1;
  std::vector<std::vector<char>> reach(b + 1);
  reach[0].assign(target + 1, 0);
  reach[0][0] = 1;
  for (int i = 0; i < b; ++i) {
    reach[i + 1] = reach[i];
    for (long long s = target; s >= deltas[i]; --s)
      if (reach[i][s - deltas[i]]) reach[i + 1][s] = 1;
  }
  if (!reach[b][target]) throw ConstructionFailed("near-magic flip set not found");
  std::vector<char> flip_delta(2 * b, 0);
  long long s = target;
  for (int i = b; i > 0; --i) {
    if (s >= deltas[i - 1] && reach[i - 1][s - deltas[i - 1]]) {
      flip_delta[deltas[i - 1]] = 1;
      s -= deltas[i - 1];
    }
  }
  IntMatrix m(2, b);
  for (int j = 1; j <= b; ++j) {
    const int delta = 2 * b + 1 - 2 * j;
    const bool flip = flip_delta[delta];
    m.at(0, j - 1) = flip ? 2 * b + 1 - j : j;
    m.at(1, j - 1) = flip ? j : 2 * b + 1 - j;
  }
  return m;
}

IntMatrix vstack(const std::vector<IntMatrix>& parts) {
  int rows = 0;
  for (const auto& p : parts) rows += p.rows();
  IntMatrix out(rows, parts[0].cols());
  int r0 = 0;
  for (const auto& p : parts) {
    for (int r = 0; r < p.rows(); ++r)
      for (int c = 0; c < p.cols(); ++c) out.at(r0 + r, c) = p.at(r, c);
    r0 += p.rows();
  }
  return out;
}

IntMatrix hstack(const std::vector<IntMatrix>& parts) {
  int cols = 0;
  for (const auto& p : parts) cols += p.cols();
  IntMatrix out(parts[0].rows(), cols);
  int c0 = 0;
  for (const auto& p : parts) {
    for (int r = 0; r < p.rows(); ++r)
      for (int c = 0; c < p.cols(); ++c) out.at(r, c0 + c) = p.at(r, c);
    c0 += p.cols();
  }
  return out;
}

}  // namespace

bool mr_exists(int a, int b) {
  return a > 1 && b > 1 && a * b > 4 && (a % 2) == (b % 2);
}

bool nmr_exists(int a, int b) { return a >= 2 && a % 2 == 0 && b >= 3 && b % 2 == 1; }

bool ka_exists(int a, int b) {
  if (a < 2) throw std::invalid_argument("a Kotzig array needs at least two rows");
  return a % 2 == 0 || b % 2 == 1;
}

bool mrs_exists(int a, int b, int c) {
  if (a > b) std::swap(a, b);
  if (a <= 1 || c < 1) return false;
  if (a % 2 == 1 && b % 2 == 1) return c % 2 == 1;
  if (a % 2 == 0 && b % 2 == 0) return !(a == 2 && b == 2);
  return false;
}

IntMatrix odd_magic_square(int n, SquareVariant variant) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("odd magic square needs odd order >= 3");
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int n1 = (i + j) % n + 1;
      const int shift = variant == SquareVariant::N2 ? (i - j - 1) : (i - j);
      const int nx = ((shift % n) + n) % n + 1;
      m.at(i, j) = n1 + n * (nx - 1);
    }
  }
  return m;
}

IntMatrix siamese_magic_square(int m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("Siamese square needs odd order >= 3");
  IntMatrix sq(m, m);
  int r = 0, c = m / 2;  // start in the middle of the first row
  for (int v = 1; v <= m * m; ++v) {
    sq.at(r, c) = v;
    const int nr = (r - 1 + m) % m;
    const int nc = (c + 1) % m;
    if (sq.at(nr, nc) != 0) {
      r = (r + 1) % m;  // filled: step down instead
    } else {
      r = nr;
      c = nc;
    }
  }
  return sq;
}

KotzigMatrix kotzig_array(int a, int b) {
  if (!ka_exists(a, b))
    throw NonexistentDesign("Kotzig array KA" + shape_str(a, b) +
                            " does not exist: an odd number of rows needs odd width");
  IntMatrix m(a, b);
  int r0 = 0;
  if (a % 2 == 1) {
    // three-row template: identity; odd-step descending with wrap;
    // the column-sum complement (a permutation again for odd b)
    for (int j = 1; j <= b; ++j) {
      const int row2 = j <= (b + 1) / 2 ? b - 2 * (j - 1) : 2 * b + 2 - 2 * j;
      m.at(0, j - 1) = j;
      m.at(1, j - 1) = row2;
      m.at(2, j - 1) = 3 * (b + 1) / 2 - j - row2;
    }
    r0 = 3;
  }
  for (; r0 < a; r0 += 2) {
    for (int j = 0; j < b; ++j) {
      m.at(r0, j) = j + 1;
      m.at(r0 + 1, j) = b - j;
    }
  }
  return {m, false};
}

KotzigMatrix quasi_kotzig_array(int mm, int r) {
  if (mm < 3 || mm % 2 == 0 || r < 2 || r % 2 == 1)
    throw std::invalid_argument("quasi Kotzig array needs odd rows >= 3 and even width >= 2");
  const int k = r / 2;
  IntMatrix q(mm, r);
  for (int j = 1; j <= r; ++j) {
    q.at(0, j - 1) = j;
    q.at(1, j - 1) = j <= k ? 2 * k + 1 - 2 * j : 4 * k + 2 - 2 * j;
    q.at(2, j - 1) = j <= k ? k + j : j - k;
  }
  for (int row = 3; row < mm; row += 2) {
    for (int j = 0; j < r; ++j) {
      q.at(row, j) = j + 1;
      q.at(row + 1, j) = r - j;
    }
  }
  return {q, true};
}

const IntMatrix& mr_7x11_fixture() {
  static const IntMatrix fixture = IntMatrix::from_rows({
      {77, 57, 43, 56, 15, 1, 64, 50, 36, 22, 8},
      {6, 9, 34, 23, 30, 37, 44, 51, 58, 65, 72},
      {3, 10, 17, 33, 31, 38, 45, 54, 59, 66, 73},
      {39, 46, 53, 60, 67, 74, 4, 11, 18, 25, 32},
      {75, 61, 47, 24, 19, 5, 68, 52, 40, 26, 12},
      {2, 20, 16, 48, 62, 76, 13, 27, 41, 55, 69},
      {71, 70, 63, 29, 49, 42, 35, 28, 21, 14, 7},
  });
  return fixture;
}

IntMatrix magic_rectangle(int a, int b) {
  if (!mr_exists(a, b))
    throw NonexistentDesign(
        "magic rectangle MR" + shape_str(a, b) +
        " does not exist: needs a,b > 1, ab > 4 and a, b of equal parity");
  if (a > b) return magic_rectangle(b, a).transposed();
  if (a == b)
    return a % 2 == 1 ? odd_magic_square(a, SquareVariant::N2)
                      : vstack(magic_rectangle_set(2, a, a / 2));
  if (a == 2) return mr_two_rows(b);
  if (a % 2 == 0) return vstack(magic_rectangle_set(2, b, a / 2));
  if (a == 7 && b == 11) return mr_7x11_fixture();
  if (a == 3) return three_row_magic_rectangle(b);
  if (smallest_odd_factor(a) < a) {
    const int g = smallest_odd_factor(a);
    return vstack(magic_rectangle_set(g, b, a / g));
  }
  if (smallest_odd_factor(b) < b) {
    const int h = smallest_odd_factor(b);
    std::vector<IntMatrix> parts = magic_rectangle_set(a, h, b / h);
    return hstack(parts);
  }
  const long long rho = static_cast<long long>(b) * (a * b + 1) / 2;
  return build_constant_sum_rectangle(a, b, std::vector<long long>(a, rho),
                                      static_cast<long long>(a) * (a * b + 1) / 2);
}

IntMatrix nearly_magic_rectangle(int a, int b) {
  if (!nmr_exists(a, b))
    throw NonexistentDesign("nearly magic rectangle NMR" + shape_str(a, b) +
                            " does not exist: needs even a >= 2 and odd b >= 3");
  if (a == 2) return nmr_two_rows(b);
  const long long lo = (static_cast<long long>(b) * (1 + a * b) - 1) / 2;
  std::vector<long long> targets(a, lo);
  for (int i = a / 2; i < a; ++i) targets[i] = lo + 1;
  return build_constant_sum_rectangle(a, b, targets,
                                      static_cast<long long>(a) * (1 + a * b) / 2);
}

std::vector<IntMatrix> magic_rectangle_set(int a, int b, int c) {
  if (!mrs_exists(a, b, c))
    throw NonexistentDesign(
        "magic rectangle set MRS" + shape_str(a, b, c) +
        " does not exist: needs a,b,c all odd, or a,b both even with (a,b) != (2,2)");
  if (a > b) {
    auto set = magic_rectangle_set(b, a, c);
    for (auto& m : set) m = m.transposed();
    return set;
  }
  if (c == 1) return {magic_rectangle(a, b)};
  // Kotzig lift: scale a magic rectangle into value blocks of size c,
  // then spread each block across the copies with a circulant of a
  // Kotzig column. Every copy keeps constant row and column sums.
  const IntMatrix base = magic_rectangle(a, b);
  const IntMatrix w = shift_scale(base, c);
  const KotzigMatrix ka = kotzig_array(a, c);
  std::vector<IntMatrix> out;
  out.reserve(c);
  for (int t = 0; t < c; ++t) {
    std::vector<int> column(a);
    for (int i = 0; i < a; ++i) column[i] = ka.mat.at(i, t);
    IntMatrix u = circulant_lift(column, b, c);
    IntMatrix z(a, b);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) z.at(i, j) = w.at(i, j) + u.at(i, j);
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace lamagic
