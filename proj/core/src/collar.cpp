#include "freeimm/collar.hpp"

#include <sstream>

#include "freeimm/ansatz.hpp"
#include "freeimm/error.hpp"
#include "freeimm/fixtures.hpp"
#include "freeimm/linalg.hpp"

namespace freeimm {

std::string to_string(CollarVerdict v) {
  return v == CollarVerdict::FreeOnCollar ? "FREE_ON_COLLAR" : "NOT_FREE_ON_COLLAR";
}

RatPoly hessian_combination(const CollarProfile& p) {
  const RatPoly u{0, 1};
  const RatPoly& a = p.a;
  const RatPoly a1 = a.derivative(), a2 = a1.derivative();
  const RatPoly c1 = p.c.derivative(), c2 = c1.derivative();
  return (a - Rational(3) * (u * a1)) * c2 + (Rational(3) * (u * a2) - Rational(2) * a1) * c1;
}

namespace {

std::array<Rational, 3> jet(const RatPoly& f, const Rational& u) {
  const RatPoly f1 = f.derivative();
  return {f(u), f1(u), f1.derivative()(u)};
}

JetTable table_at(const CollarProfile& p, const Rational& u, const std::array<RatPoly, 3>& model) {
  JetTable t;
  t.actual = {jet(p.a, u), jet(p.b(), u), jet(p.c, u)};
  t.model = {jet(model[0], u), jet(model[1], u), jet(model[2], u)};
  return t;
}

}  // namespace

JetReport jet_match(const CollarProfile& p) {
  const std::array<RatPoly, 3> h0{RatPoly{1}, RatPoly{0, 1}, RatPoly(std::vector<Rational>{0, 0, Rational(-1, 2)})};
  const std::array<RatPoly, 3> h1{RatPoly{0, 2}, RatPoly{0, 0, 2}, RatPoly{0, 0, 2}};
  return {table_at(p, 0, h0), table_at(p, 1, h1)};
}

CollarCertificate verify_collar(const CollarProfile& p) {
  CollarCertificate cert;
  cert.H = hessian_combination(p);
  if (cert.H.is_zero()) throw ZeroPolynomial();
  auto [k, scale] = primitive_part(-cert.H);
  cert.K = std::move(k);
  cert.K_scale = scale;
  cert.jets = jet_match(p);
  const SignDomain unit = SignDomain::closed(0, 1);
  cert.a_positive_on_01 = certify_sign(p.a, unit);
  cert.K_positive_on_01 = certify_sign(cert.K, unit);
  // det = -2 a^3 H = 2 a^3 K / K_scale
  std::ostringstream os;
  os << "det DF = -2*a^3*H = a^3*K/" << Rational(cert.K_scale / 2).get_str();
  cert.det_formula = os.str();
  const bool positive = cert.a_positive_on_01.verdict == SignVerdict::PositiveOnInterval &&
                        cert.K_positive_on_01.verdict == SignVerdict::PositiveOnInterval;
  cert.verdict = (positive && cert.jets.jet0_ok() && cert.jets.jet1_ok()) ? CollarVerdict::FreeOnCollar
                                                                          : CollarVerdict::NotFreeOnCollar;
  return cert;
}

Rational profile_determinant_at(const RatPoly& a, const RatPoly& b, const RatPoly& c, const Rational& u0) {
  WeightSet ws;
  ws.k = 1;
  ws.weights = {{1}, {2}};
  ws.fixed_coordinate = true;
  std::vector<std::vector<Rational>> jets;
  for (const auto& [fa, fb, fc] : {std::array<RatPoly, 3>{a, b, c},
                                   std::array<RatPoly, 3>{a.derivative(), b.derivative(), c.derivative()},
                                   std::array<RatPoly, 3>{a.derivative().derivative(), b.derivative().derivative(),
                                                          c.derivative().derivative()}}) {
    jets.push_back({fa(u0), Rational(0), fb(u0), Rational(0), fc(u0)});
  }
  const auto indices = column_indices(1, 2, {});
  const auto cols = columns_from_jets<Rational>(ws, indices, jets);
  Matrix<Rational> m(5, std::vector<Rational>(5));
  for (std::size_t col = 0; col < 5; ++col) {
    for (std::size_t row = 0; row < 5; ++row) m[row][col] = cols[col][row];
  }
  return determinant(std::move(m));
}

Rational ptilde_determinant_at(const Rational& x, const Rational& y) {
  // components: linear part l and symmetric Hessian Q (f = l.(x,y) + (x,y)Q(x,y)/2)
  struct Quad {
    std::array<Rational, 2> l;
    std::array<std::array<Rational, 2>, 2> q;
  };
  const Rational z = 0, one = 1;
  const std::array<Quad, 5> comps{{
      {{one, z}, {{{z, z}, {z, z}}}},
      {{z, one}, {{{z, z}, {z, z}}}},
      {{z, z}, {{{one, z}, {z, Rational(-1)}}}},
      {{z, z}, {{{z, one}, {one, z}}}},
      {{z, z}, {{{one, z}, {z, one}}}},
  }};
  Matrix<Rational> m(5, std::vector<Rational>(5));
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& f = comps[i];
    m[i][0] = f.l[0] + f.q[0][0] * x + f.q[0][1] * y;  // d/dx
    m[i][1] = f.l[1] + f.q[1][0] * x + f.q[1][1] * y;  // d/dy
    m[i][2] = f.q[0][0];                               // d2/dx2
    m[i][3] = f.q[0][1];                               // d2/dxdy
    m[i][4] = f.q[1][1];                               // d2/dy2
  }
  return determinant(std::move(m));
}

std::array<RatPoly, 3> dilated_cylinder_profile(const Rational& lambda) {
  const Rational l2 = lambda * lambda;
  return {RatPoly::constant(lambda), RatPoly::monomial(l2, 1), RatPoly::monomial(-l2 / 2, 2)};
}

StandardModels standard_models() {
  StandardModels m;
  const CollarProfile cylinder{RatPoly{1}, RatPoly(std::vector<Rational>{0, 0, Rational(-1, 2)})};
  const RatPoly det_c = Rational(-2) * (cylinder.a * cylinder.a * cylinder.a * hessian_combination(cylinder));
  if (det_c.degree() > 0) throw Error("signed-cylinder determinant is not constant");
  m.cylinder_det = det_c.coeff(0);
  m.ptilde_det = ptilde_determinant_at(0, 0);
  const RatPoly r{0, 1};
  const RatPoly half_r2 = RatPoly::monomial(Rational(1, 2), 2);
  for (const Rational& r0 : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
    m.wtilde_samples.push_back({r0, profile_determinant_at(r, half_r2, half_r2, r0)});
  }
  return m;
}

CollarProfile reference_collar_profile() {
  const Json doc = Json::parse(fixture_text("collar"));
  return collar_profile_from_json(doc.at("spec"));
}

Json to_json(const CollarProfile& p) { return Json{{"a", to_json(p.a)}, {"c", to_json(p.c)}}; }

CollarProfile collar_profile_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("c")) {
    throw ValidationError({"collar profile: expected {\"a\": <RatPoly>, \"c\": <RatPoly>}"});
  }
  return {rat_poly_from_json(j.at("a"), "collar.a"), rat_poly_from_json(j.at("c"), "collar.c")};
}

namespace {

Json jet_table_json(const JetTable& t) {
  Json j;
  const char* names[] = {"a", "b", "c"};
  for (std::size_t f = 0; f < 3; ++f) {
    Json actual = Json::array(), model = Json::array();
    for (std::size_t d = 0; d < 3; ++d) {
      actual.push_back(to_json(t.actual[f][d]));
      model.push_back(to_json(t.model[f][d]));
    }
    j["actual"][names[f]] = std::move(actual);
    j["model"][names[f]] = std::move(model);
  }
  j["matches"] = t.matches();
  return j;
}

}  // namespace

Json to_json(const JetReport& r) {
  return Json{{"u0", jet_table_json(r.at0)}, {"u1", jet_table_json(r.at1)}, {"jet0_ok", r.jet0_ok()},
              {"jet1_ok", r.jet1_ok()}};
}

Json to_json(const CollarCertificate& c) {
  return Json{{"H", to_json(c.H)},
              {"K", to_json(c.K)},
              {"K_scale", to_json(c.K_scale)},
              {"jets", to_json(c.jets)},
              {"jet0_ok", c.jets.jet0_ok()},
              {"jet1_ok", c.jets.jet1_ok()},
              {"a_positive_on_01", to_json(c.a_positive_on_01)},
              {"K_positive_on_01", to_json(c.K_positive_on_01)},
              {"det_formula", c.det_formula},
              {"verdict", to_string(c.verdict)}};
}

Json to_json(const StandardModels& m) {
  Json samples = Json::array();
  for (const auto& s : m.wtilde_samples) samples.push_back(Json{{"r", to_json(s.r)}, {"det", to_json(s.det)}});
  return Json{{"cylinder_det", to_json(m.cylinder_det)},
              {"ptilde_det", to_json(m.ptilde_det)},
              {"wtilde_samples", samples},
              {"dilation_exponents", m.dilation_exponents},
              {"dilation_det_exponent", m.dilation_det_exponent}};
}

}  // namespace freeimm
