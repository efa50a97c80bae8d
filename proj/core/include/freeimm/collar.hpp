#pragma once

#include <array>
#include <string>
#include <vector>

#include "freeimm/json_io.hpp"
#include "freeimm/rat_poly.hpp"
#include "freeimm/sturm.hpp"

namespace freeimm {

/// Radial profile of F(u, th) = (a cos th, a sin th, b cos 2th, b sin 2th, c)
/// on the collar u in [0, 1], with b = u * a.
struct CollarProfile {
  RatPoly a;
  RatPoly c;

  RatPoly b() const { return RatPoly{0, 1} * a; }
};

/// H = (a - 3u a') c'' + (3u a'' - 2a') c'; det DF = -2 a^3 H.
RatPoly hessian_combination(const CollarProfile& p);

/// Value, first and second derivative of each of a, b, c at one endpoint.
struct JetTable {
  std::array<std::array<Rational, 3>, 3> actual;  // [a|b|c][0|1|2]
  std::array<std::array<Rational, 3>, 3> model;
  bool matches() const { return actual == model; }
};

struct JetReport {
  JetTable at0;  // against h0 = (1, u, -u^2/2)
  JetTable at1;  // against h1 = (2u, 2u^2, 2u^2)
  bool jet0_ok() const { return at0.matches(); }
  bool jet1_ok() const { return at1.matches(); }
};

JetReport jet_match(const CollarProfile& p);

enum class CollarVerdict { FreeOnCollar, NotFreeOnCollar };
std::string to_string(CollarVerdict v);

struct CollarCertificate {
  RatPoly H;
  RatPoly K;        // K = K_scale * (-H), primitive with integer coefficients
  Rational K_scale; // positive
  JetReport jets;
  PositivityCertificate a_positive_on_01;
  PositivityCertificate K_positive_on_01;
  std::string det_formula;
  CollarVerdict verdict = CollarVerdict::NotFreeOnCollar;
};

/// Throws EndpointIsRoot if a or K vanishes at u = 0 or u = 1.
CollarCertificate verify_collar(const CollarProfile& p);

/// Exact osculating determinant of the profile map at u0, in the column order
/// (d_th, d_u, d_thth, d_thu, d_uu), through the block-rotation machinery.
/// b is given explicitly so non-collar profiles (the polar model) work too.
Rational profile_determinant_at(const RatPoly& a, const RatPoly& b, const RatPoly& c, const Rational& u0);

/// Osculating determinant of the quadratic map P~ at (x, y).
Rational ptilde_determinant_at(const Rational& x, const Rational& y);

struct StandardModels {
  Rational cylinder_det;  // det DC, constant
  Rational ptilde_det;    // det of P~'s osculating matrix, constant
  struct PolarSample {
    Rational r;
    Rational det;
  };
  std::vector<PolarSample> wtilde_samples;
  std::array<int, 5> dilation_exponents{1, 1, 2, 2, 2};
  int dilation_det_exponent = 8;  // det D(D_l o F) = l^8 det DF
};

StandardModels standard_models();

/// The profile of D_lambda o C: (lambda, lambda^2 u, -lambda^2 u^2 / 2).
std::array<RatPoly, 3> dilated_cylinder_profile(const Rational& lambda);

CollarProfile reference_collar_profile();

Json to_json(const CollarProfile& p);
CollarProfile collar_profile_from_json(const Json& j);
Json to_json(const JetReport& r);
Json to_json(const CollarCertificate& c);
Json to_json(const StandardModels& m);

}  // namespace freeimm
