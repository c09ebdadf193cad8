#pragma once

// The su(2) generators in the anti-Hermitian normalization
//   sigma_x = 1/2 [[0, 1], [-1, 0]],  sigma_y = i/2 [[0, 1], [1, 0]],
//   sigma_z = i/2 diag(1, -1),
// which satisfy [sigma_x, sigma_y] = sigma_z and its cyclic permutations.

#include "linalg.hpp"

namespace liectl::pauli {

inline ComplexMatrix sigma_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 0.5, -0.5, 0.0;
  return m;
}

inline ComplexMatrix sigma_y() {
  const Complex h(0.0, 0.5);
  ComplexMatrix m(2, 2);
  m << 0.0, h, h, 0.0;
  return m;
}

inline ComplexMatrix sigma_z() {
  const Complex h(0.0, 0.5);
  ComplexMatrix m(2, 2);
  m << h, 0.0, 0.0, -h;
  return m;
}

}  // namespace liectl::pauli
