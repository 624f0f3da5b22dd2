#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lamagic {

/// Shape of a rectangular array; count > 1 describes a set of rectangles.
struct ArrayShape {
  int rows = 0;
  int cols = 0;
  int count = 1;

  friend bool operator==(const ArrayShape&, const ArrayShape&) = default;
};

/// Dense row-major integer matrix with an optional blanked cell.
/// A blanked cell participates in neither sums nor range checks.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, int fill = 0)
      : rows_(rows), cols_(cols), cells_(static_cast<size_t>(rows) * cols, fill) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
  }

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m.cols_) throw std::invalid_argument("ragged rows");
      int j = 0;
      for (int v : row) m.at(i, j++) = v;
      ++i;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int& at(int r, int c) { return cells_[static_cast<size_t>(r) * cols_ + c]; }
  int at(int r, int c) const { return cells_[static_cast<size_t>(r) * cols_ + c]; }

  const std::vector<int>& cells() const { return cells_; }

  void set_blank(int r, int c) { blank_ = {r, c}; }
  std::optional<std::pair<int, int>> blank() const { return blank_; }
  bool is_blank(int r, int c) const { return blank_ && blank_->first == r && blank_->second == c; }

  long long row_sum(int r) const {
    long long s = 0;
    for (int c = 0; c < cols_; ++c)
      if (!is_blank(r, c)) s += at(r, c);
    return s;
  }

  long long col_sum(int c) const {
    long long s = 0;
    for (int r = 0; r < rows_; ++r)
      if (!is_blank(r, c)) s += at(r, c);
    return s;
  }

  std::vector<long long> row_sums() const {
    std::vector<long long> s(rows_);
    for (int r = 0; r < rows_; ++r) s[r] = row_sum(r);
    return s;
  }

  std::vector<long long> col_sums() const {
    std::vector<long long> s(cols_);
    for (int c = 0; c < cols_; ++c) s[c] = col_sum(c);
    return s;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    if (blank_) t.blank_ = {blank_->second, blank_->first};
    return t;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> cells_;
  std::optional<std::pair<int, int>> blank_;
};

}  // namespace lamagic
