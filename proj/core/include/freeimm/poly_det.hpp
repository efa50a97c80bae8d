#pragma once

#include "freeimm/linalg.hpp"
#include "freeimm/rat_poly.hpp"
#include "freeimm/trig_poly.hpp"
#include "freeimm/weierstrass.hpp"

namespace freeimm {

/// Fraction-free (Bareiss) determinant of a square matrix over Q[t]. Rows are
/// scaled to primitive integer polynomials and elimination runs in Z[t] with
/// exact divisions.
RatPoly bareiss_determinant(const Matrix<RatPoly>& m);

/// Determinant of a square trig-polynomial matrix, computed by converting
/// each row to Weierstrass form over the common row denominator
/// (1+t^2)^{row max frequency}, eliminating, and reducing.
struct TrigDeterminant {
  TrigPoly value;
  WeierstrassForm form;    // minimal
  int cleared_power = 0;   // sum of row denominators before reduction
};

TrigDeterminant trig_determinant(const Matrix<TrigPoly>& m);

}  // namespace freeimm
