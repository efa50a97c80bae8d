#pragma once

#include "freeimm/rat_poly.hpp"
#include "freeimm/trig_poly.hpp"

namespace freeimm {

/// numerator(t) / (1+t^2)^denom_power, the image of a trig polynomial under
/// t = tan(z/2). Minimal forms have (1+t^2) not dividing the numerator.
struct WeierstrassForm {
  RatPoly numerator;
  int denom_power = 0;

  Rational operator()(const Rational& t) const;
  friend bool operator==(const WeierstrassForm&, const WeierstrassForm&) = default;
};

enum class LimitSign { Positive, Negative, ZeroLimit };

WeierstrassForm to_weierstrass(const TrigPoly& a);

/// Inverse of to_weierstrass. Requires deg numerator <= 2 * denom_power.
TrigPoly from_weierstrass(const WeierstrassForm& w);

/// Removes every (1+t^2) factor shared by numerator and denominator.
WeierstrassForm reduce(WeierstrassForm w);

/// Sign of the limit t -> infinity (the value at z = pi). When the numerator
/// degree is below 2N the limit is zero and the caller must evaluate at pi.
LimitSign value_at_infinity_sign(const WeierstrassForm& w);

}  // namespace freeimm
