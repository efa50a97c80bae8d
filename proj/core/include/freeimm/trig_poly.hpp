#pragma once

#include <map>
#include <ostream>
#include <string>

#include "freeimm/rational.hpp"

namespace freeimm {

/// Finite Fourier series c + sum_k (a_k cos kz + b_k sin kz) with rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is mathematical equality.
class TrigPoly {
 public:
  using Coeffs = std::map<int, Rational>;

  TrigPoly() = default;
  TrigPoly(long c) : constant_(c) {}  // NOLINT(google-explicit-constructor)
  TrigPoly(const Rational& c) : constant_(c) {}  // NOLINT(google-explicit-constructor)
  TrigPoly(Rational constant, Coeffs cos_coeffs, Coeffs sin_coeffs);

  static TrigPoly cos(int k, const Rational& c = 1);
  static TrigPoly sin(int k, const Rational& c = 1);

  const Rational& constant() const { return constant_; }
  const Coeffs& cos_coeffs() const { return cos_; }
  const Coeffs& sin_coeffs() const { return sin_; }
  Rational cos_coeff(int k) const;
  Rational sin_coeff(int k) const;

  bool is_zero() const { return constant_ == 0 && cos_.empty() && sin_.empty(); }
  bool is_constant() const { return cos_.empty() && sin_.empty(); }
  int max_frequency() const;

  TrigPoly derivative() const;

  /// Exact value at the angle z with tan(z/2) = t0.
  Rational eval_weierstrass(const Rational& t0) const;
  /// Exact value at z = pi (t = infinity).
  Rational eval_at_pi() const;
  double evaluate(double z) const;

  TrigPoly operator-() const;
  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  TrigPoly& operator*=(const Rational& c);

  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(TrigPoly a, const Rational& c) { return a *= c; }
  friend TrigPoly operator*(const Rational& c, TrigPoly a) { return a *= c; }
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    return a.constant_ == b.constant_ && a.cos_ == b.cos_ && a.sin_ == b.sin_;
  }

  std::string to_string(const std::string& var = "z") const;

 private:
  void prune();

  Rational constant_;
  Coeffs cos_;
  Coeffs sin_;
};

std::ostream& operator<<(std::ostream& os, const TrigPoly& p);

}  // namespace freeimm
