#pragma once

#include <vector>

#include "freeimm/rational.hpp"

namespace freeimm {

template <class T>
using Matrix = std::vector<std::vector<T>>;  // row-major

/// Rank over Q by Gaussian elimination.
int rank(Matrix<Rational> m);

/// Determinant over Q by Gaussian elimination.
Rational determinant(Matrix<Rational> m);

/// Double-precision determinant, LU with partial pivoting.
double determinant(Matrix<double> m);

}  // namespace freeimm
