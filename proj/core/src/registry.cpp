#include "freeimm/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "freeimm/collar.hpp"
#include "freeimm/error.hpp"
#include "freeimm/fixtures.hpp"
#include "freeimm/verifier.hpp"

namespace freeimm {

bool CaseReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Comparison& c) { return c.pass; });
}

std::vector<std::string> CaseReport::summary_lines() const {
  std::vector<std::string> out;
  out.reserve(checks.size());
  for (const auto& c : checks) out.push_back(c.name + " = " + c.actual);
  return out;
}

bool ReproReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseReport& c) { return c.passed(); });
}

std::string ReproReport::summary_table() const {
  constexpr std::size_t kMaxCell = 48;
  auto clip = [](const std::string& s) { return s.size() <= kMaxCell ? s : s.substr(0, kMaxCell - 3) + "..."; };
  std::vector<std::array<std::string, 5>> rows{{"case", "check", "expected", "actual", "status"}};
  for (const auto& c : cases) {
    for (const auto& ch : c.checks) {
      rows.push_back({c.name, ch.name, clip(ch.expected), clip(ch.actual), ch.pass ? "PASS" : "FAIL"});
    }
  }
  std::array<std::size_t, 5> width{};
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < 5; ++i) {
      if (i) os << " | ";
      if (i + 1 < 5) {
        os << std::left << std::setw(static_cast<int>(width[i])) << r[i];
      } else {
        os << r[i];
      }
    }
    os << '\n';
  }
  std::size_t passed = 0;
  for (const auto& c : cases) passed += c.passed() ? 1 : 0;
  os << passed << "/" << cases.size() << " cases passed\n";
  return os.str();
}

namespace {

class Checker {
 public:
  explicit Checker(CaseReport& r) : r_(r) {}

  void text(std::string name, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    r_.checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
  }
  void rational(std::string name, const Rational& expected, const Rational& actual) {
    text(std::move(name), format_rational(expected), format_rational(actual));
  }
  void integer(std::string name, long expected, long actual) {
    text(std::move(name), std::to_string(expected), std::to_string(actual));
  }
  void flag(std::string name, bool actual) { text(std::move(name), "true", actual ? "true" : "false"); }

 private:
  CaseReport& r_;
};

std::string join_signs(const std::vector<SignTableRow>& rows, bool plus) {
  std::string s;
  for (const auto& r : rows) {
    if (!s.empty()) s += ' ';
    const int v = plus ? r.sign_plus_inf : r.sign_minus_inf;
    s += v > 0 ? '+' : (v < 0 ? '-' : '0');
  }
  return s;
}

std::string poly_text(const RatPoly& p) { return to_json(p).dump(); }

void compare_certificate(Checker& ck, const FreenessCertificate& cert, const Json& pub) {
  const Rational& c = cert.normalization_constant;
  const RatPoly& num = cert.weierstrass.numerator;
  ck.text("verdict", "FREE", to_string(cert.verdict));
  if (pub.contains("determinant")) {
    ck.text("D(z)", trig_poly_from_json(pub.at("determinant")).to_string(), cert.determinant.to_string());
  }
  if (pub.contains("numerator")) {
    const RatPoly expected = rat_poly_from_json(pub.at("numerator"), "published.numerator");
    ck.text("numerator (" + std::to_string(expected.degree() + 1) + " coefficients)", poly_text(expected),
            poly_text(c * num));
  }
  if (pub.contains("numerator_degree")) ck.integer("numerator degree", pub.at("numerator_degree").get<long>(), num.degree());
  if (pub.contains("denom_power")) ck.integer("(1+t^2) power", pub.at("denom_power").get<long>(), cert.weierstrass.denom_power);
  if (pub.contains("value_at_zero_published")) {
    ck.rational("p(0)", rational_from_json(pub.at("value_at_zero_published")), c * cert.value_at_zero);
  }
  if (pub.contains("leading_published") && !num.is_zero()) {
    ck.rational("leading coefficient", rational_from_json(pub.at("leading_published")), c * num.leading());
  }
  if (pub.contains("D_at_pi")) ck.rational("D(pi)", rational_from_json(pub.at("D_at_pi")), cert.value_at_pi);
  if (cert.positivity) {
    if (pub.contains("v_minus_inf")) ck.integer("V(-inf)", pub.at("v_minus_inf").get<long>(), cert.positivity->v_low);
    if (pub.contains("v_plus_inf")) ck.integer("V(+inf)", pub.at("v_plus_inf").get<long>(), cert.positivity->v_high);
    if (pub.contains("real_roots")) {
      ck.integer("real roots", pub.at("real_roots").get<long>(), cert.positivity->real_root_count);
    }
  }
  const bool wants_table = pub.contains("sign_table") || pub.contains("sign_signs_minus");
  if (wants_table && !num.is_zero()) {
    const auto rows = sign_table(sturm_sequence(num));
    if (pub.contains("sign_table")) {
      ck.text("sign table (" + std::to_string(pub.at("sign_table").size()) + " rows)", pub.at("sign_table").dump(),
              to_json(rows).dump());
    }
    if (pub.contains("sign_signs_minus")) {
      ck.text("chain signs at -inf", pub.at("sign_signs_minus").get<std::string>(), join_signs(rows, false));
    }
    if (pub.contains("sign_signs_plus")) {
      ck.text("chain signs at +inf", pub.at("sign_signs_plus").get<std::string>(), join_signs(rows, true));
    }
  }
}

Rational published_constant(const Json& pub) {
  if (!pub.contains("normalization_constant")) return 1;
  const Rational c = rational_from_json(pub.at("normalization_constant"));
  if (sgn(c) <= 0) throw ValidationError({"published.normalization_constant must be positive"});
  return c;
}

void run_ansatz(CaseReport& r, const Json& doc) {
  const AnsatzSpec spec = validate_spec(doc.at("spec"));
  const Json& pub = doc.at("published");
  FreenessCertificate cert = verify(spec);
  cert.normalization_constant = published_constant(pub);
  Checker ck(r);
  compare_certificate(ck, cert, pub);
  if (pub.contains("uniform_row_power") && pub.contains("cancelled_power")) {
    // every entry has (1+t^2)-denominator power <= the loop's max frequency; scaling all rows by
    // (1+t^2)^U and cancelling (1+t^2)^c must leave the minimal denominator
    int fmax = 0;
    for (const auto& p : spec.loop) fmax = std::max(fmax, p.max_frequency());
    ck.integer("uniform row power", pub.at("uniform_row_power").get<long>(), fmax);
    const long rows = static_cast<long>(spec.loop.size());
    ck.integer("cancelled (1+t^2) power", pub.at("cancelled_power").get<long>(),
               rows * fmax - cert.weierstrass.denom_power);
  }
  if (pub.contains("generator_blocks")) {
    // generator X_i restricted to block j is w_{ji} J
    ck.text("generator blocks", pub.at("generator_blocks").dump(), Json(spec.weight_set.weights).dump());
  }
  r.certificate = with_schema(to_json(cert));
}

void run_extended(CaseReport& r, const Json& doc) {
  const ExtendedAnsatzSpec spec = extended_spec_from_json(doc.at("spec"));
  const Json& pub = doc.at("published");
  FreenessCertificate cert = verify_extended(spec);
  cert.normalization_constant = published_constant(pub);
  Checker ck(r);
  compare_certificate(ck, cert, pub);
  if (pub.contains("companion_determinant")) {
    ck.rational("companion det", rational_from_json(pub.at("companion_determinant")),
                cert.companion_determinant.value_or(Rational(0)));
  }
  if (pub.contains("instance_constant") && pub.contains("weierstrass_factor")) {
    // reduced det = instance_constant * weierstrass_factor * N / (1+t^2)^N
    const Rational product =
        rational_from_json(pub.at("instance_constant")) * rational_from_json(pub.at("weierstrass_factor"));
    ck.rational("instance constant * Weierstrass factor", product, 1 / cert.normalization_constant);
  }
  r.certificate = with_schema(to_json(cert));
}

void run_collar(CaseReport& r, const Json& doc) {
  const CollarProfile profile = collar_profile_from_json(doc.at("spec"));
  const Json& pub = doc.at("published");
  const CollarCertificate cert = verify_collar(profile);
  Checker ck(r);
  ck.text("verdict", "FREE_ON_COLLAR", to_string(cert.verdict));
  if (pub.contains("K")) {
    const RatPoly k = rat_poly_from_json(pub.at("K"), "published.K");
    ck.text("K (" + std::to_string(k.degree() + 1) + " coefficients)", poly_text(k), poly_text(cert.K));
  }
  if (pub.contains("K_scale")) {
    const Rational scale = rational_from_json(pub.at("K_scale"));
    ck.rational("K scale", scale, cert.K_scale);
    ck.flag("H = -K/scale", cert.H == -(cert.K * (1 / scale)));
  }
  auto jets = [&](const char* key, const JetTable& t) {
    if (!pub.contains(key)) return;
    const char* names[] = {"a", "b", "c"};
    for (std::size_t f = 0; f < 3; ++f) {
      const Json& want = pub.at(key).at(names[f]);
      for (std::size_t d = 0; d < 3; ++d) {
        std::string label = std::string(names[f]) + std::string(d, '\'') + "(" + (key[6] == '0' ? "0" : "1") + ")";
        ck.rational(label, rational_from_json(want.at(d)), t.actual[f][d]);
      }
    }
  };
  jets("jets_u0", cert.jets.at0);
  jets("jets_u1", cert.jets.at1);
  ck.flag("jet match u=0", cert.jets.jet0_ok());
  ck.flag("jet match u=1", cert.jets.jet1_ok());
  ck.text("a on [0,1]", "positive_on_interval", to_string(cert.a_positive_on_01.verdict));
  ck.text("K on [0,1]", "positive_on_interval", to_string(cert.K_positive_on_01.verdict));
  if (pub.contains("cylinder_determinant")) {
    ck.rational("det DC", rational_from_json(pub.at("cylinder_determinant")), standard_models().cylinder_det);
  }
  r.certificate = with_schema(to_json(cert));
}

}  // namespace

CaseReport run_case_document(const Json& doc) {
  CaseReport r;
  const auto start = std::chrono::steady_clock::now();
  if (!doc.is_object() || !doc.contains("spec") || !doc.contains("published")) {
    throw ValidationError({"case document needs \"spec\" and \"published\""});
  }
  r.name = doc.value("case", std::string("unnamed"));
  const std::string kind = doc.value("kind", std::string("ansatz"));
  if (kind == "ansatz") {
    run_ansatz(r, doc);
  } else if (kind == "extended") {
    run_extended(r, doc);
  } else if (kind == "collar") {
    run_collar(r, doc);
  } else {
    throw ValidationError({"kind: unknown case kind '" + kind + "'"});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CaseReport run_case(std::string_view name) { return run_case_document(Json::parse(fixture_text(name))); }

ReproReport repro_paper(const std::vector<std::string>& names, unsigned jobs) {
  const std::vector<std::string>& selected = names.empty() ? fixture_names() : names;
  for (const auto& n : selected) fixture_text(n);  // reject unknown names up front
  ReproReport report;
  report.cases.resize(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        report.cases[i] = run_case(selected[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(selected.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

AnsatzSpec builtin_spec(std::string_view name) {
  const Json doc = Json::parse(fixture_text(name));
  if (doc.value("kind", std::string("ansatz")) != "ansatz") {
    throw ValidationError({"case '" + std::string(name) + "' is not a block-rotation ansatz"});
  }
  return validate_spec(doc.at("spec"));
}

std::optional<WeightSet> builtin_weight_set(int m) {
  static const char* names[] = {"t2", "t3", "t4", "t5"};
  if (m < 2 || m > 5) return std::nullopt;
  return builtin_spec(names[m - 2]).weight_set;
}

}  // namespace freeimm
