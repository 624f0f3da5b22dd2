#pragma once

#include <span>
#include <string>
#include <vector>

#include "lamagic/matrix.hpp"

namespace lamagic {

enum class DesignKind {
  MagicSquare,
  MagicRectangle,
  NearlyMagicRectangle,
  KotzigArray,
  QuasiKotzigArray,
  MagicRectangleSet,
};

const char* design_kind_name(DesignKind kind);

/// Observed row/column sums, flattened per rectangle in order.
struct MagicConstants {
  std::vector<long long> row_sums;
  std::vector<long long> col_sums;
};

/// Outcome of re-deriving a design's invariants from its entries alone.
/// Failures are report content; verification never throws.
struct VerificationReport {
  DesignKind kind{};
  bool passed = false;
  MagicConstants observed;
  std::vector<std::string> violations;
};

VerificationReport verify_array(std::span<const IntMatrix> matrices, DesignKind kind);
VerificationReport verify_array(const IntMatrix& matrix, DesignKind kind);

}  // namespace lamagic
