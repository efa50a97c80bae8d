#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "freeimm/rational.hpp"

namespace freeimm {

/// Dense univariate polynomial over Q; coefficient i multiplies t^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree() == -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<long> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int degree);
  /// (1 + t^2)^n
  static RatPoly one_plus_t2_pow(int n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Zero for i outside [0, degree].
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;
  double evaluate(double t) const;

  RatPoly derivative() const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws ZeroPolynomial for b = 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly rem(const RatPoly& a, const RatPoly& b);

/// Monic gcd (zero only if both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// p / gcd(p, p'), made monic.
RatPoly squarefree_part(const RatPoly& p);

/// Scales p by a positive rational so that the result has coprime integer
/// coefficients. Returns {primitive, scale} with primitive = scale * p.
std::pair<RatPoly, Rational> primitive_part(const RatPoly& p);

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

}  // namespace freeimm
