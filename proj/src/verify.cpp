#include "lamagic/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lamagic {

namespace {

std::string fmt(const char* what, long long got, long long want) {
  std::ostringstream os;
  os << what << ": got " << got << ", expected " << want;
  return os.str();
}

// Entries across all matrices must be exactly {1..n}, blanks excluded.
void check_entry_range(std::span<const IntMatrix> ms, long long n,
                       std::vector<std::string>& out) {
  std::map<int, int> count;
  for (const auto& m : ms)
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (!m.is_blank(r, c)) ++count[m.at(r, c)];
  for (const auto& [v, k] : count) {
    if (v < 1 || v > n) {
      std::ostringstream os;
      os << "entry " << v << " outside 1.." << n;
      out.push_back(os.str());
    } else if (k > 1) {
      std::ostringstream os;
      os << "entry " << v << " appears " << k << " times";
      out.push_back(os.str());
    }
  }
  if (static_cast<long long>(count.size()) < n) out.push_back("entry range has gaps");
}

void check_uniform(const std::vector<long long>& sums, long long want, const char* what,
                   std::vector<std::string>& out) {
  for (size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] != want) {
      std::ostringstream os;
      os << what << " " << i + 1 << ": got " << sums[i] << ", expected " << want;
      out.push_back(os.str());
    }
  }
}

// Exactly half the sums at lo, half at lo+1.
void check_split(const std::vector<long long>& sums, long long lo, const char* what,
                 std::vector<std::string>& out) {
  size_t nlo = 0, nhi = 0;
  for (size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] == lo)
      ++nlo;
    else if (sums[i] == lo + 1)
      ++nhi;
    else {
      std::ostringstream os;
      os << what << " " << i + 1 << ": got " << sums[i] << ", expected " << lo << " or "
         << lo + 1;
      out.push_back(os.str());
    }
  }
  if (nlo != nhi) {
    std::ostringstream os;
    os << what << " split uneven: " << nlo << " low vs " << nhi << " high";
    out.push_back(os.str());
  }
}

void check_row_permutations(const IntMatrix& m, std::vector<std::string>& out) {
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<bool> seen(m.cols() + 1, false);
    bool bad = false;
    for (int c = 0; c < m.cols(); ++c) {
      int v = m.at(r, c);
      if (v < 1 || v > m.cols() || seen[v]) {
        bad = true;
        break;
      }
      seen[v] = true;
    }
    if (bad) {
      std::ostringstream os;
      os << "row " << r + 1 << " is not a permutation of 1.." << m.cols();
      out.push_back(os.str());
    }
  }
}

}  // namespace

const char* design_kind_name(DesignKind kind) {
  switch (kind) {
    case DesignKind::MagicSquare: return "magic-square";
    case DesignKind::MagicRectangle: return "magic-rectangle";
    case DesignKind::NearlyMagicRectangle: return "nmr";
    case DesignKind::KotzigArray: return "ka";
    case DesignKind::QuasiKotzigArray: return "qka";
    case DesignKind::MagicRectangleSet: return "mrs";
  }
  return "?";
}

VerificationReport verify_array(std::span<const IntMatrix> ms, DesignKind kind) {
  VerificationReport rep;
  rep.kind = kind;
  if (ms.empty()) {
    rep.violations.push_back("no matrices given");
    return rep;
  }
  const int a = ms[0].rows(), b = ms[0].cols();
  const long long c = static_cast<long long>(ms.size());
  for (const auto& m : ms) {
    if (m.rows() != a || m.cols() != b) {
      rep.violations.push_back("matrices in the set have differing shapes");
      return rep;
    }
    for (auto& s : m.row_sums()) rep.observed.row_sums.push_back(s);
    for (auto& s : m.col_sums()) rep.observed.col_sums.push_back(s);
  }
  auto& v = rep.violations;

  switch (kind) {
    case DesignKind::MagicSquare: {
      if (a != b) v.push_back("not square");
      if (c != 1) v.push_back("expected a single matrix");
      check_entry_range(ms, static_cast<long long>(a) * b, v);
      const long long magic = static_cast<long long>(a) * (static_cast<long long>(a) * a + 1) / 2;
      check_uniform(rep.observed.row_sums, magic, "row sum", v);
      check_uniform(rep.observed.col_sums, magic, "column sum", v);
      break;
    }
    case DesignKind::MagicRectangle: {
      if (c != 1) v.push_back("expected a single matrix");
      const long long n = static_cast<long long>(a) * b;
      check_entry_range(ms, n, v);
      check_uniform(rep.observed.row_sums, b * (n + 1) / 2, "row sum", v);
      check_uniform(rep.observed.col_sums, a * (n + 1) / 2, "column sum", v);
      break;
    }
    case DesignKind::NearlyMagicRectangle: {
      if (c != 1) v.push_back("expected a single matrix");
      if (a % 2 != 0 || b % 2 != 1) v.push_back("shape must be even x odd");
      const long long n = static_cast<long long>(a) * b;
      check_entry_range(ms, n, v);
      check_uniform(rep.observed.col_sums, a * (n + 1) / 2, "column sum", v);
      if (a % 2 == 0) check_split(rep.observed.row_sums, (b * (n + 1) - 1) / 2, "row sum", v);
      break;
    }
    case DesignKind::KotzigArray: {
      if (c != 1) v.push_back("expected a single matrix");
      if (a < 2) v.push_back("needs at least two rows");
      check_row_permutations(ms[0], v);
      check_uniform(rep.observed.col_sums, static_cast<long long>(a) * (b + 1) / 2,
                    "column sum", v);
      break;
    }
    case DesignKind::QuasiKotzigArray: {
      if (c != 1) v.push_back("expected a single matrix");
      if (b % 2 != 0) v.push_back("needs an even number of columns");
      check_row_permutations(ms[0], v);
      if (b % 2 == 0)
        check_split(rep.observed.col_sums, (static_cast<long long>(a) * (b + 1) - 1) / 2,
                    "column sum", v);
      break;
    }
    case DesignKind::MagicRectangleSet: {
      const long long n = static_cast<long long>(a) * b * c;
      check_entry_range(ms, n, v);
      check_uniform(rep.observed.row_sums, b * (n + 1) / 2, "row sum", v);
      check_uniform(rep.observed.col_sums, a * (n + 1) / 2, "column sum", v);
      break;
    }
  }

  rep.passed = rep.violations.empty();
  return rep;
}

VerificationReport verify_array(const IntMatrix& matrix, DesignKind kind) {
  return verify_array(std::span<const IntMatrix>(&matrix, 1), kind);
}

}  // namespace lamagic
