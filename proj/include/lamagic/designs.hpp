#pragma once

#include <stdexcept>
#include <vector>

#include "lamagic/matrix.hpp"

namespace lamagic {

/// Requested design cannot exist for the given parameters.
class NonexistentDesign : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The design exists but the deterministic search gave up within budget.
class ConstructionFailed : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Existence predicates.
bool mr_exists(int a, int b);
bool nmr_exists(int a, int b);
bool ka_exists(int a, int b);  // a < 2 is a domain error
bool mrs_exists(int a, int b, int c);

enum class SquareVariant { N2, N3 };

/// Row-permutation array: every row is a permutation of 1..cols.
/// quasi=false: all column sums equal rows*(cols+1)/2.
/// quasi=true: half the columns sum one below that midpoint, half one above.
struct KotzigMatrix {
  IntMatrix mat;
  bool quasi = false;
};

IntMatrix odd_magic_square(int n, SquareVariant variant);
IntMatrix siamese_magic_square(int m);
IntMatrix magic_rectangle(int a, int b);
IntMatrix nearly_magic_rectangle(int a, int b);
KotzigMatrix kotzig_array(int a, int b);
KotzigMatrix quasi_kotzig_array(int m, int r);
std::vector<IntMatrix> magic_rectangle_set(int a, int b, int c);

/// The 7x11 magic rectangle shipped as a fixture.
const IntMatrix& mr_7x11_fixture();

}  // namespace lamagic
