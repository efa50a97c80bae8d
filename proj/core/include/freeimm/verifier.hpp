#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freeimm/ansatz.hpp"
#include "freeimm/json_io.hpp"
#include "freeimm/sturm.hpp"
#include "freeimm/weierstrass.hpp"

namespace freeimm {

enum class FreenessVerdict { Free, NotFree };

std::string to_string(FreenessVerdict v);

struct FreenessCertificate {
  std::string spec_label;
  TrigPoly determinant;
  WeierstrassForm weierstrass;  // minimal form
  int cleared_power = 0;        // (1+t^2) power cleared by row scaling before reduction
  /// Absent exactly when the determinant vanishes identically.
  std::optional<PositivityCertificate> positivity;
  Rational value_at_zero;
  Rational value_at_pi;
  std::vector<std::string> column_ordering;
  FreenessVerdict verdict = FreenessVerdict::NotFree;
  /// published display polynomial = normalization_constant * numerator (1 if none given).
  Rational normalization_constant = 1;
  /// Extended ansatz only.
  std::optional<Rational> companion_determinant;

  bool is_free() const { return verdict == FreenessVerdict::Free; }
};

/// determinant -> Weierstrass -> Sturm -> verdict, for any order >= 2.
FreenessCertificate verify(const AnsatzSpec& spec);

/// Same pipeline; requires order >= 2 and target_dim = q_{m,order}.
FreenessCertificate verify_kfree(const AnsatzSpec& spec);

/// Certificate for the reduced u-determinant of the two-loop ansatz. The
/// exponential factor e^{2 sum Q_r} is positive and not represented.
FreenessCertificate verify_extended(const ExtendedAnsatzSpec& spec);

/// Rebuilds the certificate from a determinant; shared by all entry points.
FreenessCertificate certify_determinant(const std::string& label, const TrigDeterminant& det,
                                        std::vector<std::string> ordering);

Json to_json(const FreenessCertificate& c);
FreenessCertificate certificate_from_json(const Json& j);

}  // namespace freeimm
