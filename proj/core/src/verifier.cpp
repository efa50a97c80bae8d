#include "freeimm/verifier.hpp"

#include "freeimm/error.hpp"

namespace freeimm {

std::string to_string(FreenessVerdict v) { return v == FreenessVerdict::Free ? "FREE" : "NOT_FREE"; }

FreenessCertificate certify_determinant(const std::string& label, const TrigDeterminant& det,
                                        std::vector<std::string> ordering) {
  FreenessCertificate cert;
  cert.spec_label = label;
  cert.determinant = det.value;
  cert.weierstrass = det.form;
  cert.cleared_power = det.cleared_power;
  cert.column_ordering = std::move(ordering);
  cert.value_at_zero = det.value.eval_weierstrass(0);
  cert.value_at_pi = det.value.eval_at_pi();
  if (det.form.numerator.is_zero()) {
    cert.verdict = FreenessVerdict::NotFree;
    return cert;
  }
  cert.positivity = certify_sign(det.form.numerator, SignDomain::all_reals());
  const int s = cert.positivity->definite_sign();
  // t = infinity (z = pi) is not seen by the numerator when deg < 2N.
  cert.verdict = (s != 0 && sign(cert.value_at_pi) == s) ? FreenessVerdict::Free : FreenessVerdict::NotFree;
  return cert;
}

FreenessCertificate verify(const AnsatzSpec& spec) {
  DerivativeFamily fam = derivative_family(spec);
  std::vector<std::string> labels;
  for (const auto& d : fam.ordering) labels.push_back(d.label());
  return certify_determinant(spec.label, osculating_determinant(fam), std::move(labels));
}

FreenessCertificate verify_kfree(const AnsatzSpec& spec) {
  if (spec.order < 2) throw ValidationError({"k-free verification needs order >= 2"});
  const long q = critical_dimension(spec.m(), spec.order);
  if (spec.weight_set.target_dim() != q) {
    throw DimensionMismatch("target_dim " + std::to_string(spec.weight_set.target_dim()) + " != q_{m,k} = " +
                            std::to_string(q));
  }
  return verify(spec);
}

FreenessCertificate verify_extended(const ExtendedAnsatzSpec& spec) {
  ReducedMatrix reduced = extended_reduced_matrix(spec);
  Rational companion = companion_determinant(spec);
  FreenessCertificate cert =
      certify_determinant(spec.label, trig_determinant(reduced.entries), reduced.column_labels);
  cert.companion_determinant = companion;
  return cert;
}

Json to_json(const FreenessCertificate& c) {
  Json j;
  j["spec_label"] = c.spec_label;
  j["determinant"] = to_json(c.determinant);
  j["weierstrass"] = to_json(c.weierstrass);
  j["cleared_power"] = c.cleared_power;
  j["positivity"] = c.positivity ? to_json(*c.positivity) : Json(nullptr);
  j["value_at_zero"] = to_json(c.value_at_zero);
  j["value_at_pi"] = to_json(c.value_at_pi);
  j["column_ordering"] = c.column_ordering;
  j["verdict"] = to_string(c.verdict);
  j["normalization_constant"] = to_json(c.normalization_constant);
  if (c.companion_determinant) j["companion_determinant"] = to_json(*c.companion_determinant);
  return j;
}

FreenessCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError({"certificate: expected an object"});
  FreenessCertificate c;
  try {
    c.spec_label = j.at("spec_label").get<std::string>();
    c.determinant = trig_poly_from_json(j.at("determinant"), "certificate.determinant");
    c.weierstrass = weierstrass_from_json(j.at("weierstrass"));
    c.cleared_power = j.at("cleared_power").get<int>();
    if (!j.at("positivity").is_null()) c.positivity = positivity_from_json(j.at("positivity"));
    c.value_at_zero = rational_from_json(j.at("value_at_zero"));
    c.value_at_pi = rational_from_json(j.at("value_at_pi"));
    c.column_ordering = j.at("column_ordering").get<std::vector<std::string>>();
    const auto v = j.at("verdict").get<std::string>();
    if (v != "FREE" && v != "NOT_FREE") throw ValidationError({"certificate: bad verdict \"" + v + "\""});
    c.verdict = v == "FREE" ? FreenessVerdict::Free : FreenessVerdict::NotFree;
    c.normalization_constant = rational_from_json(j.at("normalization_constant"));
    if (j.contains("companion_determinant")) c.companion_determinant = rational_from_json(j.at("companion_determinant"));
  } catch (const Json::exception& e) {
    throw ValidationError({std::string("certificate: ") + e.what()});
  }
  return c;
}

}  // namespace freeimm
