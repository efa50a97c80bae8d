#include "freeimm/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "freeimm/error.hpp"

namespace freeimm {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ValidationError({msg}); }

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing field \"" + key + "\"");
  return *it;
}

int require_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) fail(where + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(where + ": expected an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Json coeff_map(const TrigPoly::Coeffs& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[std::to_string(k)] = to_json(v);
  return o;
}

TrigPoly::Coeffs coeff_map_from_json(const Json& j, const std::string& where) {
  TrigPoly::Coeffs m;
  if (!j.is_object()) fail(where + ": expected an object of frequency -> \"p/q\"");
  for (const auto& [key, val] : j.items()) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail(where + ": frequency key \"" + key + "\" is not an integer");
    }
    if (k < 1) fail(where + ": frequency keys must be >= 1");
    m.emplace(k, rational_from_json(val, where + "[" + key + "]"));
  }
  return m;
}

WeightSet weight_set_from_json(const Json& j, const std::string& where) {
  WeightSet ws;
  ws.k = require_int(j, "k", where);
  const Json& w = require(j, "weights", where);
  if (!w.is_array()) fail(where + ": \"weights\" must be an array of integer arrays");
  for (std::size_t i = 0; i < w.size(); ++i) {
    ws.weights.push_back(int_vector(w[i], where + ".weights[" + std::to_string(i) + "]"));
  }
  if (auto it = j.find("fixed"); it != j.end()) {
    if (!it->is_boolean()) fail(where + ": \"fixed\" must be a boolean");
    ws.fixed_coordinate = it->get<bool>();
  }
  if (auto it = j.find("fixed_index"); it != j.end()) {
    if (!it->is_number_integer()) fail(where + ": \"fixed_index\" must be an integer");
    ws.fixed_index = it->get<int>();
  }
  return ws;
}

void weight_set_to_json(Json& j, const WeightSet& ws) {
  j["k"] = ws.k;
  j["weights"] = ws.weights;
  j["fixed"] = ws.fixed_coordinate;
  if (ws.fixed_coordinate && ws.fixed_index >= 0) j["fixed_index"] = ws.fixed_index;
}

}  // namespace

Json to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ValidationError& e) {
      fail(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(where + ": expected a \"p/q\" string");
}

Json to_json(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

RatPoly rat_poly_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of \"p/q\" strings (index = degree)");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return RatPoly(std::move(c));
}

Json to_json(const TrigPoly& p) {
  return Json{{"const", to_json(p.constant())}, {"cos", coeff_map(p.cos_coeffs())}, {"sin", coeff_map(p.sin_coeffs())}};
}

TrigPoly trig_poly_from_json(const Json& j, const std::string& where) {
  if (j.is_string() || j.is_number_integer()) return TrigPoly(rational_from_json(j, where));
  if (!j.is_object()) fail(where + ": expected {\"const\", \"cos\", \"sin\"}");
  for (const auto& [key, _] : j.items()) {
    if (key != "const" && key != "cos" && key != "sin") fail(where + ": unknown field \"" + key + "\"");
  }
  Rational c = 0;
  if (auto it = j.find("const"); it != j.end()) c = rational_from_json(*it, where + ".const");
  TrigPoly::Coeffs cs, ss;
  if (auto it = j.find("cos"); it != j.end()) cs = coeff_map_from_json(*it, where + ".cos");
  if (auto it = j.find("sin"); it != j.end()) ss = coeff_map_from_json(*it, where + ".sin");
  return TrigPoly(c, std::move(cs), std::move(ss));
}

Json to_json(const WeierstrassForm& w) { return Json{{"num", to_json(w.numerator)}, {"N", w.denom_power}}; }

WeierstrassForm weierstrass_from_json(const Json& j) {
  WeierstrassForm w;
  w.numerator = rat_poly_from_json(require(j, "num", "weierstrass"), "weierstrass.num");
  w.denom_power = require_int(j, "N", "weierstrass");
  return w;
}

Json to_json(const AnsatzSpec& s) {
  Json j;
  weight_set_to_json(j, s.weight_set);
  j["order"] = s.order;
  j["label"] = s.label;
  Json loop = Json::array();
  for (const auto& c : s.loop) loop.push_back(to_json(c));
  j["loop"] = std::move(loop);
  switch (s.ordering.kind) {
    case OrderingKind::Canonical: j["ordering"] = "canonical"; break;
    case OrderingKind::Lexicographic: j["ordering"] = "lexicographic"; break;
    case OrderingKind::Explicit: {
      Json a = Json::array();
      for (const auto& d : s.ordering.explicit_columns) a.push_back(d.label());
      j["ordering"] = std::move(a);
      break;
    }
  }
  return j;
}

AnsatzSpec validate_spec(const Json& j) {
  const std::string where = "spec";
  if (!j.is_object()) fail("spec: expected an object");
  AnsatzSpec s;
  std::vector<std::string> errors;
  auto collect = [&](auto&& f) {
    try {
      f();
    } catch (const ValidationError& e) {
      errors.insert(errors.end(), e.messages().begin(), e.messages().end());
    }
  };
  collect([&] { s.weight_set = weight_set_from_json(j, where); });
  collect([&] {
    const Json& loop = require(j, "loop", where);
    if (!loop.is_array()) fail("spec: \"loop\" must be an array");
    for (std::size_t i = 0; i < loop.size(); ++i) {
      s.loop.push_back(trig_poly_from_json(loop[i], "spec.loop[" + std::to_string(i) + "]"));
    }
  });
  collect([&] {
    if (auto it = j.find("order"); it != j.end()) {
      if (!it->is_number_integer() || it->get<int>() < 2) fail("spec: \"order\" must be an integer >= 2");
      s.order = it->get<int>();
    }
  });
  collect([&] {
    if (auto it = j.find("label"); it != j.end()) {
      if (!it->is_string()) fail("spec: \"label\" must be a string");
      s.label = it->get<std::string>();
    }
  });
  if (!errors.empty()) throw ValidationError(std::move(errors));

  collect([&] {
    auto it = j.find("ordering");
    if (it == j.end()) return;
    if (it->is_string()) {
      const auto v = it->get<std::string>();
      if (v == "canonical") {
        s.ordering.kind = OrderingKind::Canonical;
      } else if (v == "lexicographic") {
        s.ordering.kind = OrderingKind::Lexicographic;
      } else {
        fail("spec: unknown ordering \"" + v + "\"");
      }
    } else if (it->is_array()) {
      s.ordering.kind = OrderingKind::Explicit;
      for (const auto& l : *it) {
        if (!l.is_string()) fail("spec: explicit ordering entries must be column labels");
        s.ordering.explicit_columns.push_back(DerivativeIndex::parse(l.get<std::string>(), s.weight_set.k));
      }
      column_indices(s.weight_set.k, s.order, s.ordering);
    } else {
      fail("spec: \"ordering\" must be a string or an array of labels");
    }
  });
  collect([&] { s.weight_set.validate(); });
  const int target = s.weight_set.target_dim();
  if (static_cast<int>(s.loop.size()) != target) {
    errors.push_back("loop length " + std::to_string(s.loop.size()) + " != target_dim " + std::to_string(target));
  }
  const long q = critical_dimension(s.m(), s.order);
  if (target != q) {
    errors.push_back("target_dim " + std::to_string(target) + " != critical dimension q_{" + std::to_string(s.m()) +
                     "," + std::to_string(s.order) + "} = " + std::to_string(q));
  }
  if (!errors.empty()) throw ValidationError(std::move(errors));
  return s;
}

Json to_json(const ExtendedAnsatzSpec& s) {
  Json j;
  j["kind"] = "extended";
  weight_set_to_json(j, s.weight_set);
  j.erase("fixed");
  j["mu"] = s.mu;
  Json q = Json::array();
  for (const auto& c : s.logderivs) q.push_back(to_json(c));
  j["logderivs"] = std::move(q);
  j["companion"] = Json{{"u", Json::array({to_json(s.companion_u[0]), to_json(s.companion_u[1])})},
                        {"v", Json::array({to_json(s.companion_v[0]), to_json(s.companion_v[1])})}};
  j["label"] = s.label;
  return j;
}

ExtendedAnsatzSpec extended_spec_from_json(const Json& j) {
  const std::string where = "extended spec";
  ExtendedAnsatzSpec s;
  s.weight_set = weight_set_from_json(j, where);
  s.mu = int_vector(require(j, "mu", where), where + ".mu");
  const Json& q = require(j, "logderivs", where);
  if (!q.is_array()) fail(where + ": \"logderivs\" must be an array");
  for (std::size_t i = 0; i < q.size(); ++i) {
    s.logderivs.push_back(trig_poly_from_json(q[i], where + ".logderivs[" + std::to_string(i) + "]"));
  }
  const Json& comp = require(j, "companion", where);
  for (const char* key : {"u", "v"}) {
    const Json& pair = require(comp, key, where + ".companion");
    if (!pair.is_array() || pair.size() != 2) fail(where + ".companion." + key + ": expected two trig polynomials");
    auto& dst = std::string(key) == "u" ? s.companion_u : s.companion_v;
    dst = {trig_poly_from_json(pair[0], where + ".companion"), trig_poly_from_json(pair[1], where + ".companion")};
  }
  if (auto it = j.find("label"); it != j.end() && it->is_string()) s.label = it->get<std::string>();
  s.weight_set.validate();
  return s;
}

Json to_json(const PositivityCertificate& c) {
  Json j;
  j["polynomial"] = to_json(c.polynomial);
  if (c.domain.is_all_reals()) {
    j["domain"] = "all_reals";
    j["v_minus_inf"] = c.v_low;
    j["v_plus_inf"] = c.v_high;
  } else {
    j["domain"] = Json{{"interval", Json::array({to_json(c.domain.interval->first), to_json(c.domain.interval->second)})}};
    j["v_a"] = c.v_low;
    j["v_b"] = c.v_high;
  }
  j["real_root_count"] = c.real_root_count;
  j["sample_point"] = to_json(c.sample_point);
  j["sample_value"] = to_json(c.sample_value);
  j["leading_coefficient"] = to_json(c.leading_coefficient);
  j["verdict"] = to_string(c.verdict);
  return j;
}

PositivityCertificate positivity_from_json(const Json& j) {
  const std::string where = "positivity";
  PositivityCertificate c;
  c.polynomial = rat_poly_from_json(require(j, "polynomial", where));
  const Json& dom = require(j, "domain", where);
  if (dom.is_string() && dom.get<std::string>() == "all_reals") {
    c.domain = SignDomain::all_reals();
    c.v_low = require_int(j, "v_minus_inf", where);
    c.v_high = require_int(j, "v_plus_inf", where);
  } else {
    const Json& iv = require(dom, "interval", where);
    if (!iv.is_array() || iv.size() != 2) fail(where + ": interval must have two endpoints");
    c.domain = SignDomain::closed(rational_from_json(iv[0]), rational_from_json(iv[1]));
    c.v_low = require_int(j, "v_a", where);
    c.v_high = require_int(j, "v_b", where);
  }
  c.real_root_count = require_int(j, "real_root_count", where);
  c.sample_point = rational_from_json(require(j, "sample_point", where));
  c.sample_value = rational_from_json(require(j, "sample_value", where));
  c.leading_coefficient = rational_from_json(require(j, "leading_coefficient", where));
  const Json& v = require(j, "verdict", where);
  if (!v.is_string()) fail(where + ": verdict must be a string");
  c.verdict = sign_verdict_from_string(v.get<std::string>());
  return c;
}

Json to_json(const std::vector<SignTableRow>& rows) {
  auto ch = [](int s) { return std::string(1, s > 0 ? '+' : (s < 0 ? '-' : '0')); };
  Json a = Json::array();
  for (const auto& r : rows) {
    a.push_back(Json::array({std::to_string(r.index), std::to_string(r.degree), ch(r.sign_minus_inf), ch(r.sign_plus_inf)}));
  }
  return a;
}

Json to_json(const ObstructionReport& r) {
  Json j{{"m", r.m},
         {"k", r.k},
         {"blocks", r.blocks},
         {"required_blocks", r.required_blocks},
         {"count_ok", r.count_ok},
         {"weights_given", r.weights_given},
         {"passes", r.passes},
         {"summary", r.summary()}};
  if (r.weights_given) {
    j["quadratic_rank"] = r.quadratic_rank;
    j["rank_ok"] = r.rank_ok;
  }
  return j;
}

Json with_schema(Json j) {
  j["schema_version"] = kSchemaVersion;
  return j;
}

Json load_json_argument(const std::string& arg) {
  std::string text;
  std::size_t first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) fail("cannot read input file \"" + arg + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace freeimm
