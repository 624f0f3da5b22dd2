#pragma once

#include <vector>

#include "lamagic/matrix.hpp"

namespace lamagic {

/// Deterministic search for an a x b array on {1..ab} with prescribed
/// row sums and a constant column sum. Plug-in point: direct
/// constructions can bypass this entirely; verify_array remains the
/// ground truth either way.
///
/// Throws ConstructionFailed when the bounded search gives up.
IntMatrix build_constant_sum_rectangle(int rows, int cols,
                                       const std::vector<long long>& row_targets,
                                       long long col_target);

/// 3 x b arrangement (b odd) built from zero-sum triples in centered
/// coordinates; used for three-row magic rectangles.
IntMatrix three_row_magic_rectangle(int b);

}  // namespace lamagic
