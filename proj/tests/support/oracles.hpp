#pragma once

// Independent reference implementations used only by the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "freeimm/ansatz.hpp"
#include "freeimm/rat_poly.hpp"
#include "freeimm/trig_poly.hpp"

namespace freeimm::oracle {

/// Distinct real roots of p in the open interval (lo, hi), by Descartes'
/// rule of signs and bisection on the squarefree part.
int isolate_roots(const RatPoly& p, const Rational& lo, const Rational& hi);

/// Distinct real roots on all of R (Cauchy bound, then isolate_roots).
int isolate_real_roots(const RatPoly& p);

/// Laplace expansion along the first row.
TrigPoly cofactor_determinant(const std::vector<std::vector<TrigPoly>>& m);
Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m);

/// Plain Gaussian elimination with the first nonzero pivot.
Rational gauss_determinant(std::vector<std::vector<Rational>> m);

/// Full osculating matrix of F(x, z) = R(x) v(z), R included, at the point
/// with tan(x_i/2) = sx[i] and tan(z/2) = tz, columns in `order`. Rotation
/// angles and all partials are built directly from cos/sin derivative cycles.
std::vector<std::vector<Rational>> full_osculating_matrix(const AnsatzSpec& spec, const std::vector<Rational>& sx,
                                                          const Rational& tz,
                                                          const std::vector<DerivativeIndex>& order);

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  /// p/q with |p| <= num_bound, 1 <= q <= den_bound.
  Rational rational(long num_bound = 9, long den_bound = 6);
  RatPoly poly(int max_degree, long num_bound = 9, long den_bound = 4);
  /// Integer polynomial with prescribed real roots times a positive-definite factor.
  RatPoly poly_with_roots(int max_degree);
  TrigPoly trig(int max_frequency, long num_bound = 5, long den_bound = 3);
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace freeimm::oracle
