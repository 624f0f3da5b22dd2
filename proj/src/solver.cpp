#include "lamagic/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>

#include "lamagic/designs.hpp"

namespace lamagic {

namespace {

struct Budget {
  long long nodes = 0;
  long long cap = 0;
  bool spent() { return ++nodes > cap; }
};

// ---- stage A: deal 1..ab into row pools with exact row sums ----
//
// Passes are dealt in complementary pairs, so every row receives a
// constant pair sum; a rotation schedule and optional orientation flips
// vary which values co-locate. When b is odd the last three passes
// follow a KA(3,a) (a odd) or QKA(3,a) (a even) column pattern; the
// quasi variant is what produces the two-valued near-magic row split.

struct DealVariant {
  int rot = 1;
  std::array<int, 3> order = {0, 1, 2};
  unsigned flip_mask = 0;
};

std::vector<std::vector<int>> deal_row_pools(int a, int b, const DealVariant& var) {
  std::vector<std::vector<int>> pools(a);
  const int paired = (b % 2 == 0) ? b : b - 3;
  for (int t = 0; t < paired / 2; ++t) {
    const int base = 2 * t * a;
    const bool flip = (var.flip_mask >> (t % 8)) & 1u;
    for (int i = 0; i < a; ++i) {
      const int ii = (i + t * var.rot) % a;
      const int lo = base + ii + 1;
      const int hi = base + 2 * a - ii;
      pools[i].push_back(flip ? hi : lo);
      pools[i].push_back(flip ? lo : hi);
    }
  }
  if (b % 2 == 1) {
    const IntMatrix k3 =
        (a % 2 == 1) ? kotzig_array(3, a).mat : quasi_kotzig_array(3, a).mat;
    const int base = (b - 3) * a;
    for (int i = 0; i < a; ++i) {
      pools[i].push_back(base + k3.at(var.order[0], i));
      pools[i].push_back(base + a + k3.at(var.order[1], i));
      pools[i].push_back(base + 2 * a + k3.at(var.order[2], i));
    }
  }
  return pools;
}

// ---- stage B: pick one value per row pool for every column ----

struct ColumnArranger {
  int a, b;
  long long target;
  std::vector<std::vector<int>> pools;          // sorted per row
  std::vector<std::vector<char>> used;
  std::vector<long long> sufmin, sufmax;        // per row index, this column
  IntMatrix out;
  Budget* budget;

  bool cell(int j, int i, long long resid) {
    if (budget->spent()) return false;
    if (i == a) return resid == 0 && column(j + 1);
    const long long lo = resid - sufmax[i + 1];
    const long long hi = resid - sufmin[i + 1];
    const auto& pool = pools[i];
    std::vector<int> cand;
    for (size_t k = 0; k < pool.size(); ++k)
      if (!used[i][k] && pool[k] >= lo && pool[k] <= hi) cand.push_back(static_cast<int>(k));
    const double ideal = static_cast<double>(resid) - (sufmin[i + 1] + sufmax[i + 1]) / 2.0;
    std::stable_sort(cand.begin(), cand.end(), [&](int x, int y) {
      double dx = std::abs(pool[x] - ideal), dy = std::abs(pool[y] - ideal);
      if (dx != dy) return dx < dy;
      return pool[x] < pool[y];
    });
    for (int k : cand) {
      used[i][k] = 1;
      out.at(i, j) = pool[k];
      if (cell(j, i + 1, resid - pool[k])) return true;
      used[i][k] = 0;
    }
    return false;
  }

  bool column(int j) {
    if (j == b) return true;
    sufmin.assign(a + 1, 0);
    sufmax.assign(a + 1, 0);
    for (int i = a - 1; i >= 0; --i) {
      long long mn = 0, mx = 0;
      bool first = true;
      for (size_t k = 0; k < pools[i].size(); ++k) {
        if (used[i][k]) continue;
        if (first) mn = pools[i][k], first = false;
        mx = pools[i][k];
      }
      sufmin[i] = sufmin[i + 1] + mn;
      sufmax[i] = sufmax[i + 1] + mx;
    }
    return cell(j, 0, target);
  }
};

bool arrange_columns(int a, int b, std::vector<std::vector<int>> pools, long long col_target,
                     long long node_cap, IntMatrix& result) {
  ColumnArranger ar;
  ar.a = a;
  ar.b = b;
  ar.target = col_target;
  for (auto& p : pools) std::sort(p.begin(), p.end());
  ar.pools = std::move(pools);
  ar.used.assign(a, std::vector<char>(b, 0));
  ar.out = IntMatrix(a, b);
  Budget budget{0, node_cap};
  ar.budget = &budget;
  if (!ar.column(0)) return false;
  result = ar.out;
  return true;
}

// ---- fallback: unstructured cell-by-cell search ----

struct FullCell {
  int a, b;
  long long n;
  std::vector<long long> row_targets;
  long long col_target;
  std::vector<char> used;  // 1..n
  std::vector<long long> rowsum;
  IntMatrix out;
  Budget* budget;

  bool dfs(int j, int i, long long colresid) {
    if (budget->spent()) return false;
    if (i == a) {
      if (j + 1 < b) return dfs(j + 1, 0, col_target);
      for (int t = 0; t < a; ++t)
        if (rowsum[t] != row_targets[t]) return false;
      return true;
    }
    long long lo_un = 0, hi_un = 0;
    for (long long v = 1; v <= n; ++v)
      if (!used[v]) { lo_un = v; break; }
    for (long long v = n; v >= 1; --v)
      if (!used[v]) { hi_un = v; break; }
    const int rows_after = a - i - 1;
    const int cells_left = b - j - 1;  // in row i after this cell
    std::vector<int> cand;
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      const long long rem = colresid - v;
      if (rows_after == 0) {
        if (rem != 0) continue;
      } else if (rem < rows_after * lo_un || rem > rows_after * hi_un) {
        continue;
      }
      const long long rr = row_targets[i] - rowsum[i] - v;
      if (cells_left == 0) {
        if (rr != 0) continue;
      } else if (rr < cells_left * lo_un || rr > cells_left * hi_un) {
        continue;
      }
      cand.push_back(v);
    }
    const double ideal = static_cast<double>(colresid) / (rows_after + 1);
    std::stable_sort(cand.begin(), cand.end(), [&](int x, int y) {
      double dx = std::abs(x - ideal), dy = std::abs(y - ideal);
      if (dx != dy) return dx < dy;
      return x < y;
    });
    for (int v : cand) {
      used[v] = 1;
      out.at(i, j) = v;
      rowsum[i] += v;
      if (dfs(j, i + 1, colresid - v)) return true;
      used[v] = 0;
      rowsum[i] -= v;
    }
    return false;
  }
};

bool full_cell_search(int a, int b, const std::vector<long long>& row_targets,
                      long long col_target, long long node_cap, IntMatrix& result) {
  FullCell fc;
  fc.a = a;
  fc.b = b;
  fc.n = static_cast<long long>(a) * b;
  fc.row_targets = row_targets;
  fc.col_target = col_target;
  fc.used.assign(fc.n + 1, 0);
  fc.rowsum.assign(a, 0);
  fc.out = IntMatrix(a, b);
  Budget budget{0, node_cap};
  fc.budget = &budget;
  if (!fc.dfs(0, 0, col_target)) return false;
  result = fc.out;
  return true;
}

bool targets_match(const std::vector<std::vector<int>>& pools,
                   const std::vector<long long>& want) {
  for (size_t i = 0; i < pools.size(); ++i) {
    long long s = 0;
    for (int v : pools[i]) s += v;
    if (s != want[i]) return false;
  }
  return true;
}

}  // namespace

IntMatrix build_constant_sum_rectangle(int a, int b, const std::vector<long long>& row_targets,
                                       long long col_target) {
  if (a < 2 || b < 2 || static_cast<int>(row_targets.size()) != a)
    throw std::invalid_argument("bad solver arguments");

  static const std::array<std::array<int, 3>, 6> kOrders = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  static const std::array<unsigned, 4> kFlips = {0u, 0b10u, 0b0110u, 0b01010101u};
  static const std::array<int, 4> kRots = {1, 0, 2, 3};

  IntMatrix result;
  // Two ladder passes: a cheap sweep catches the easy variants quickly,
  // then a deep retry on the stubborn shapes.
  for (long long cap : {200'000LL, 6'000'000LL}) {
    for (int rot : kRots) {
      for (const auto& order : kOrders) {
        for (unsigned flips : kFlips) {
          if (b % 2 == 0 && order != kOrders[0]) continue;  // no triple block
          auto pools = deal_row_pools(a, b, {rot, order, flips});
          if (!targets_match(pools, row_targets)) continue;
          if (arrange_columns(a, b, std::move(pools), col_target, cap, result)) return result;
        }
      }
    }
  }
  if (full_cell_search(a, b, row_targets, col_target, 120'000'000LL, result)) return result;
  throw ConstructionFailed("constant-sum rectangle search exhausted its node budget");
}

IntMatrix three_row_magic_rectangle(int b) {
  if (b < 3 || b % 2 == 0) throw std::invalid_argument("three-row shape needs odd width");
  const int K = (3 * b - 1) / 2;

  // Partition {-K..K} into b zero-sum triples, largest magnitude first.
  std::vector<char> taken(2 * K + 1, 0);  // index = value + K
  std::vector<std::array<int, 3>> triples;
  Budget tb{0, 40'000'000LL};
  auto avail = [&](int v) { return !taken[v + K]; };
  auto take = [&](int v, bool on) { taken[v + K] = on ? 1 : 0; };

  std::function<bool()> pick = [&]() -> bool {
    if (tb.spent()) return false;
    int m = 0;
    bool any = false;
    for (int mag = K; mag >= 0 && !any; --mag)
      for (int s : {+1, -1}) {
        int v = s * mag;
        if (avail(v)) {
          m = v;
          any = true;
          break;
        }
      }
    if (!any) return true;
    take(m, true);
    // candidates by descending magnitude; canonical |y| <= |x| halves the branching
    for (int mag = K; mag >= 0; --mag) {
      for (int s : {+1, -1}) {
        const int x = s * mag;
        if (x == m || !avail(x)) continue;
        const int y = -m - x;
        if (y == x || y == m || y < -K || y > K || !avail(y)) continue;
        if (std::abs(y) > std::abs(x)) continue;
        take(x, true);
        take(y, true);
        triples.push_back({m, x, y});
        if (pick()) return true;
        triples.pop_back();
        take(x, false);
        take(y, false);
      }
      if (mag == 0) break;
    }
    take(m, false);
    return false;
  };
  if (!pick()) throw ConstructionFailed("zero-sum triple partition not found within budget");

  std::stable_sort(triples.begin(), triples.end(), [](const auto& s, const auto& t) {
    auto mx = [](const std::array<int, 3>& u) {
      return std::max({std::abs(u[0]), std::abs(u[1]), std::abs(u[2])});
    };
    return mx(s) > mx(t);
  });

  // Assign each triple's entries to the three rows so every row sums to zero.
  std::vector<long long> remmax(b + 1, 0);
  for (int idx = b - 1; idx >= 0; --idx) {
    const auto& t = triples[idx];
    remmax[idx] = remmax[idx + 1] + std::max({std::abs(t[0]), std::abs(t[1]), std::abs(t[2])});
  }
  std::array<long long, 3> rows = {0, 0, 0};
  std::vector<std::array<int, 3>> placed(b);
  Budget ab{0, 40'000'000LL};

  std::function<bool(int)> assign = [&](int idx) -> bool {
    if (ab.spent()) return false;
    if (idx == b) return rows[0] == 0 && rows[1] == 0 && rows[2] == 0;
    for (long long r : rows)
      if (std::abs(r) > remmax[idx]) return false;
    auto t = triples[idx];
    std::sort(t.begin(), t.end());
    std::vector<std::array<int, 3>> perms;
    do {
      perms.push_back(t);
    } while (std::next_permutation(t.begin(), t.end()));
    std::stable_sort(perms.begin(), perms.end(), [&](const auto& p, const auto& q) {
      long long mp = 0, mq = 0;
      for (int r = 0; r < 3; ++r) {
        mp = std::max(mp, std::abs(rows[r] + p[r]));
        mq = std::max(mq, std::abs(rows[r] + q[r]));
      }
      return mp < mq;
    });
    for (const auto& p : perms) {
      for (int r = 0; r < 3; ++r) rows[r] += p[r];
      placed[idx] = p;
      if (assign(idx + 1)) return true;
      for (int r = 0; r < 3; ++r) rows[r] -= p[r];
    }
    return false;
  };
  if (!assign(0)) throw ConstructionFailed("zero-sum row assignment not found within budget");

  const int mu = (3 * b + 1) / 2;
  IntMatrix m(3, b);
  for (int j = 0; j < b; ++j)
    for (int r = 0; r < 3; ++r) m.at(r, j) = placed[j][r] + mu;
  return m;
}

}  // namespace lamagic
