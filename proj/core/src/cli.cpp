#include "freeimm/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "freeimm/collar.hpp"
#include "freeimm/error.hpp"
#include "freeimm/json_io.hpp"
#include "freeimm/registry.hpp"
#include "freeimm/search.hpp"
#include "freeimm/verifier.hpp"

namespace freeimm {
namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError({"cannot write '" + path + "'"});
  f << text;
}

/// JSON goes to -o if given, to stdout with --json; otherwise `text` is printed.
void emit(const CommandRequest& req, std::ostream& out, const Json& doc, const std::string& text) {
  if (req.output_path) write_file(*req.output_path, dump_canonical(doc));
  if (req.json) {
    out << dump_canonical(doc);
  } else {
    out << text;
  }
}

std::string certificate_text(const FreenessCertificate& c) {
  std::ostringstream os;
  os << "label: " << c.spec_label << '\n'
     << "D(z) = " << c.determinant.to_string() << '\n'
     << "numerator = " << c.weierstrass.numerator.to_string() << '\n'
     << "(1+t^2) power = " << c.weierstrass.denom_power << '\n'
     << "D(0) = " << format_rational(c.value_at_zero) << '\n'
     << "D(pi) = " << format_rational(c.value_at_pi) << '\n';
  if (c.positivity) {
    os << "V(-inf) = " << c.positivity->v_low << ", V(+inf) = " << c.positivity->v_high
       << ", real roots = " << c.positivity->real_root_count << '\n';
  } else {
    os << "determinant vanishes identically\n";
  }
  if (c.companion_determinant) os << "companion det = " << format_rational(*c.companion_determinant) << '\n';
  os << "verdict: " << to_string(c.verdict) << '\n';
  return os.str();
}

int do_verify(const CommandRequest& req, std::ostream& out) {
  if (req.input.empty()) throw ValidationError({"verify: an input spec is required"});
  Json j = load_json_argument(req.input);
  if (j.contains("spec") && j.contains("published")) j = j.at("spec");  // accept a whole fixture document
  const FreenessCertificate cert =
      j.value("kind", std::string()) == "extended" ? verify_extended(extended_spec_from_json(j)) : verify(validate_spec(j));
  emit(req, out, with_schema(to_json(cert)), certificate_text(cert));
  return cert.is_free() ? exit_code::kOk : exit_code::kVerdictFailure;
}

int do_repro(const CommandRequest& req, std::ostream& out) {
  ReproReport report;
  if (!req.input.empty()) {
    report.cases.push_back(run_case_document(load_json_argument(req.input)));
  } else {
    report = repro_paper(req.cases, req.jobs);
  }
  if (req.output_path) {
    std::filesystem::create_directories(*req.output_path);
    for (const auto& c : report.cases) {
      write_file((std::filesystem::path(*req.output_path) / (c.name + ".json")).string(), dump_canonical(c.certificate));
    }
  }
  if (req.json) {
    Json all = Json::object();
    for (const auto& c : report.cases) {
      Json checks = Json::array();
      for (const auto& ch : c.checks) {
        checks.push_back(Json{{"name", ch.name}, {"expected", ch.expected}, {"actual", ch.actual}, {"pass", ch.pass}});
      }
      all[c.name] = Json{{"passed", c.passed()}, {"checks", checks}, {"certificate", c.certificate}};
    }
    out << dump_canonical(with_schema(Json{{"cases", all}, {"passed", report.passed()}}));
  } else {
    for (const auto& c : report.cases) {
      out << "[" << c.name << "] " << (c.passed() ? "PASS" : "FAIL") << '\n';
      for (const auto& line : c.summary_lines()) out << "  " << line << '\n';
    }
    out << '\n' << report.summary_table();
  }
  return report.passed() ? exit_code::kOk : exit_code::kVerdictFailure;
}

int do_search(const CommandRequest& req, std::ostream& out) {
  if (req.input.empty()) throw ValidationError({"search: a SearchConfig is required"});
  SearchConfig cfg = search_config_from_json(load_json_argument(req.input));
  if (req.certify_all) cfg.certify_all = true;
  const auto candidates = search(cfg);
  std::string lines;
  for (const auto& c : candidates) lines += to_json(c, cfg).dump() + '\n';
  if (req.output_path) write_file(*req.output_path, lines);
  out << lines;
  return exit_code::kOk;
}

int do_sturm(const CommandRequest& req, std::ostream& out) {
  if (req.input.empty()) throw ValidationError({"sturm: a polynomial (low-to-high coefficient array) is required"});
  const RatPoly p = rat_poly_from_json(load_json_argument(req.input));
  SignDomain domain = SignDomain::all_reals();
  if (req.interval) {
    const auto comma = req.interval->find(',');
    if (comma == std::string::npos) throw ValidationError({"--interval: expected \"a,b\""});
    domain = SignDomain::closed(parse_rational(req.interval->substr(0, comma)), parse_rational(req.interval->substr(comma + 1)));
  }
  if (p.is_zero()) throw ValidationError({"sturm: polynomial is zero"});
  const SturmChain chain = sturm_sequence(p);
  const auto rows = sign_table(chain);
  const PositivityCertificate cert = certify_sign(p, domain);
  Json doc{{"sign_table", to_json(rows)}, {"certificate", to_json(cert)}, {"root_count", cert.real_root_count}};
  std::ostringstream os;
  os << render_sign_table(rows) << "root count = " << cert.real_root_count << '\n'
     << "verdict: " << to_string(cert.verdict) << '\n';
  emit(req, out, with_schema(doc), os.str());
  return exit_code::kOk;
}

int do_collar(const CommandRequest& req, std::ostream& out) {
  const CollarProfile profile = req.input.empty() ? reference_collar_profile() : [&] {
    Json j = load_json_argument(req.input);
    if (j.contains("spec")) j = j.at("spec");
    return collar_profile_from_json(j);
  }();
  const CollarCertificate cert = verify_collar(profile);
  std::ostringstream os;
  os << "H = " << cert.H.to_string("u") << '\n'
     << "K = " << cert.K.to_string("u") << '\n'
     << "K = " << format_rational(cert.K_scale) << " * (-H)\n"
     << cert.det_formula << '\n'
     << "jets at u=0: " << (cert.jets.jet0_ok() ? "match" : "MISMATCH") << '\n'
     << "jets at u=1: " << (cert.jets.jet1_ok() ? "match" : "MISMATCH") << '\n'
     << "a on [0,1]: " << to_string(cert.a_positive_on_01.verdict) << '\n'
     << "K on [0,1]: " << to_string(cert.K_positive_on_01.verdict) << '\n'
     << "verdict: " << to_string(cert.verdict) << '\n';
  emit(req, out, with_schema(to_json(cert)), os.str());
  return cert.verdict == CollarVerdict::FreeOnCollar ? exit_code::kOk : exit_code::kVerdictFailure;
}

int do_obstruct(const CommandRequest& req, std::ostream& out) {
  if (req.m < 1) throw ValidationError({"--m must be >= 1"});
  std::optional<WeightSet> ws;
  if (req.weights) {
    const Json w = load_json_argument(*req.weights);
    WeightSet given;
    given.k = req.m - 1;
    try {
      given.weights = w.get<std::vector<std::vector<int>>>();
    } catch (const Json::exception&) {
      throw ValidationError({"--weights: expected [[int, ...], ...]"});
    }
    given.validate();
    ws = std::move(given);
  } else {
    ws = builtin_weight_set(req.m);
  }
  const ObstructionReport r = obstruction_check(req.m, ws);
  emit(req, out, with_schema(to_json(r)), "m = " + std::to_string(r.m) + ": " + r.summary() + '\n');
  return r.passes ? exit_code::kOk : exit_code::kVerdictFailure;
}

}  // namespace

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  try {
    switch (req.subcommand) {
      case Subcommand::Verify: return do_verify(req, out);
      case Subcommand::Repro: return do_repro(req, out);
      case Subcommand::Search: return do_search(req, out);
      case Subcommand::Sturm: return do_sturm(req, out);
      case Subcommand::Collar: return do_collar(req, out);
      case Subcommand::Obstruct: return do_obstruct(req, out);
    }
    return exit_code::kValidation;
  } catch (const ValidationError& e) {
    for (const auto& m : e.messages()) err << "error: " << m << '\n';
    return exit_code::kValidation;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return exit_code::kValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kComputation;
  }
}

}  // namespace freeimm
