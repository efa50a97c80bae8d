#include "freeimm/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "freeimm/error.hpp"
#include "freeimm/linalg.hpp"

namespace freeimm {

std::string FreeCoefficient::label() const {
  std::string s = "v" + std::to_string(component + 1) + ".";
  switch (term) {
    case Term::Constant: return s + "const";
    case Term::Cos: return s + "cos" + std::to_string(frequency);
    case Term::Sin: return s + "sin" + std::to_string(frequency);
  }
  return s;
}

namespace {

int template_max_frequency(const AnsatzSpec& spec) {
  int f = 0;
  for (const auto& c : spec.loop) f = std::max(f, c.max_frequency());
  return f;
}

Rational read_coefficient(const TrigPoly& p, const FreeCoefficient& fc) {
  switch (fc.term) {
    case FreeCoefficient::Term::Constant: return p.constant();
    case FreeCoefficient::Term::Cos: return p.cos_coeff(fc.frequency);
    case FreeCoefficient::Term::Sin: return p.sin_coeff(fc.frequency);
  }
  return 0;
}

TrigPoly write_coefficient(const TrigPoly& p, const FreeCoefficient& fc, const Rational& value) {
  const Rational old = read_coefficient(p, fc);
  switch (fc.term) {
    case FreeCoefficient::Term::Constant: return p + TrigPoly(value - old);
    case FreeCoefficient::Term::Cos: return p + TrigPoly::cos(fc.frequency, value - old);
    case FreeCoefficient::Term::Sin: return p + TrigPoly::sin(fc.frequency, value - old);
  }
  return p;
}

BigInt ceil_div(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt floor_div(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Grid coordinates n with n / denominator in [lo, hi].
struct Axis {
  long lo = 0;
  long hi = 0;
  long span() const { return hi - lo; }
};

std::vector<double> determinant_samples(const AnsatzSpec& spec, int n) {
  const auto indices = column_indices(spec.weight_set.k, spec.order, spec.ordering);
  std::vector<std::vector<TrigPoly>> derivs{spec.loop};
  for (int q = 1; q <= spec.order; ++q) {
    std::vector<TrigPoly> next;
    next.reserve(spec.loop.size());
    for (const auto& c : derivs.back()) next.push_back(c.derivative());
    derivs.push_back(std::move(next));
  }
  const std::size_t dim = spec.loop.size();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double z = 2.0 * std::numbers::pi * i / n;
    std::vector<std::vector<double>> jets;
    for (const auto& d : derivs) {
      std::vector<double> v;
      v.reserve(dim);
      for (const auto& c : d) v.push_back(c.evaluate(z));
      jets.push_back(std::move(v));
    }
    const auto cols = columns_from_jets<double>(spec.weight_set, indices, jets);
    if (cols.size() != dim) throw DimensionMismatch("column count " + std::to_string(cols.size()) + " != loop length " + std::to_string(dim));
    Matrix<double> m(dim, std::vector<double>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
      for (std::size_t r = 0; r < dim; ++r) m[r][c] = cols[c][r];
    }
    out.push_back(determinant(std::move(m)));
  }
  return out;
}

// Maps a 64-bit draw onto [0, n) by the high half of a 128-bit product.
long bounded(std::mt19937_64& rng, long n) {
  const auto wide = static_cast<unsigned __int128>(rng()) * static_cast<unsigned __int128>(n);
  return static_cast<long>(wide >> 64);
}

}  // namespace

int SearchConfig::samples() const { return std::max(grid_size, 4 * template_max_frequency(templ) + 1); }

void SearchConfig::validate() const {
  std::vector<std::string> errs;
  if (denominator < 1) errs.push_back("denominator must be >= 1");
  if (max_iters < 0) errs.push_back("max_iters must be >= 0");
  if (restarts < 1) errs.push_back("restarts must be >= 1");
  if (keep_uncertified < 0) errs.push_back("keep_uncertified must be >= 0");
  if (grid_size != 0 && grid_size < 4 * template_max_frequency(templ) + 1) {
    errs.push_back("grid_size " + std::to_string(grid_size) + " < 4 * max frequency + 1 = " +
                   std::to_string(4 * template_max_frequency(templ) + 1));
  }
  for (std::size_t i = 0; i < free.size(); ++i) {
    const auto& f = free[i];
    const std::string where = "free[" + std::to_string(i) + "]";
    if (f.component < 0 || f.component >= static_cast<int>(templ.loop.size())) errs.push_back(where + ": component out of range");
    if (f.term != FreeCoefficient::Term::Constant && f.frequency < 1) errs.push_back(where + ": frequency must be >= 1");
    if (f.lo > f.hi) errs.push_back(where + ": lo > hi");
    else if (ceil_div(f.lo * denominator) > floor_div(f.hi * denominator)) {
      errs.push_back(where + ": box contains no point of the grid");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const auto& g = free[j];
      if (g.component == f.component && g.term == f.term && g.frequency == f.frequency) {
        errs.push_back(where + ": duplicates free[" + std::to_string(j) + "]");
      }
    }
  }
  if (!errs.empty()) throw ValidationError(std::move(errs));
}

double scan_determinant(const AnsatzSpec& spec, int n) {
  if (n < 2) throw ValidationError({"scan needs at least 2 samples"});
  double best = INFINITY;
  for (double d : determinant_samples(spec, n)) best = std::min(best, std::abs(d));
  return best;
}

double score(const AnsatzSpec& spec, int n, Objective objective) {
  const auto d = determinant_samples(spec, n);
  if (objective == Objective::MinAbs) {
    double best = INFINITY;
    for (double x : d) best = std::min(best, std::abs(x));
    return best;
  }
  long balance = 0;
  for (double x : d) balance += (x > 0) - (x < 0);
  const double s = balance >= 0 ? 1.0 : -1.0;
  double best = INFINITY;
  for (double x : d) best = std::min(best, s * x);
  return best;
}

AnsatzSpec instantiate(const SearchConfig& cfg, const std::vector<Rational>& values) {
  AnsatzSpec spec = cfg.templ;
  for (std::size_t i = 0; i < cfg.free.size(); ++i) {
    auto& comp = spec.loop[static_cast<std::size_t>(cfg.free[i].component)];
    comp = write_coefficient(comp, cfg.free[i], values[i]);
  }
  return spec;
}

std::vector<Candidate> search(const SearchConfig& cfg) {
  cfg.validate();
  const int n = cfg.samples();
  const std::size_t dims = cfg.free.size();
  std::vector<Axis> axes;
  std::vector<long> start0;
  for (const auto& f : cfg.free) {
    Axis a{ceil_div(f.lo * cfg.denominator).get_si(), floor_div(f.hi * cfg.denominator).get_si()};
    const Rational t = read_coefficient(cfg.templ.loop[static_cast<std::size_t>(f.component)], f) * cfg.denominator;
    BigInt rounded = floor_div(t + Rational(1, 2));
    start0.push_back(std::clamp(rounded.get_si(), a.lo, a.hi));
    axes.push_back(a);
  }
  auto values_of = [&](const std::vector<long>& pt) {
    std::vector<Rational> v;
    v.reserve(dims);
    for (long x : pt) v.push_back(Rational(x, cfg.denominator));
    for (auto& r : v) r.canonicalize();
    return v;
  };
  auto evaluate = [&](const std::vector<long>& pt) { return score(instantiate(cfg, values_of(pt)), n, cfg.objective); };

  std::mt19937_64 rng(cfg.seed);
  std::vector<Candidate> found;
  std::vector<std::vector<long>> seen;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::vector<long> pt = start0;
    if (restart > 0) {
      for (std::size_t i = 0; i < dims; ++i) pt[i] = axes[i].lo + bounded(rng, axes[i].span() + 1);
    }
    double best = evaluate(pt);
    std::vector<long> step(dims);
    for (std::size_t i = 0; i < dims; ++i) step[i] = std::max(1L, axes[i].span() / 4);
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
      bool improved = false;
      for (std::size_t i = 0; i < dims; ++i) {
        for (long dir : {1L, -1L}) {
          std::vector<long> trial = pt;
          trial[i] = std::clamp(pt[i] + dir * step[i], axes[i].lo, axes[i].hi);
          if (trial[i] == pt[i]) continue;
          const double s = evaluate(trial);
          if (s > best) {
            best = s;
            pt = std::move(trial);
            improved = true;
            break;
          }
        }
      }
      if (!improved) {
        bool shrunk = false;
        for (auto& s : step) {
          if (s > 1) {
            s /= 2;
            shrunk = true;
          }
        }
        if (!shrunk) break;
      }
    }
    if (std::find(seen.begin(), seen.end(), pt) != seen.end()) continue;
    seen.push_back(pt);
    Candidate c;
    c.restart = restart;
    c.coefficients = values_of(pt);
    c.float_score = best;
    found.push_back(std::move(c));
  }

  for (auto& c : found) {
    if (!(cfg.certify_all || c.float_score > cfg.threshold)) continue;
    c.exact_checked = true;
    AnsatzSpec spec = instantiate(cfg, c.coefficients);
    FreenessCertificate cert = verify(spec);
    if (cert.is_free()) c.certified = std::move(cert);
  }

  // keep every certified candidate plus the best few others
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!found[i].certified) others.push_back(i);
  }
  std::stable_sort(others.begin(), others.end(),
                   [&](std::size_t a, std::size_t b) { return found[a].float_score > found[b].float_score; });
  std::vector<bool> keep(found.size(), false);
  for (std::size_t i = 0; i < found.size(); ++i) keep[i] = found[i].certified.has_value();
  for (std::size_t i = 0; i < others.size() && i < static_cast<std::size_t>(cfg.keep_uncertified); ++i) keep[others[i]] = true;
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (keep[i]) out.push_back(std::move(found[i]));
  }
  return out;
}

std::vector<Candidate> complete_loop(const std::vector<TrigPoly>& prefix, SearchConfig cfg, const Rational& radius) {
  const std::size_t dim = cfg.templ.loop.size();
  if (prefix.size() > dim) {
    throw DimensionMismatch("prefix length " + std::to_string(prefix.size()) + " > target_dim " + std::to_string(dim));
  }
  std::copy(prefix.begin(), prefix.end(), cfg.templ.loop.begin());
  const int cut = static_cast<int>(prefix.size());
  if (cfg.free.empty()) {
    const int fmax = template_max_frequency(cfg.templ);
    for (int c = cut; c < static_cast<int>(dim); ++c) {
      const TrigPoly& p = cfg.templ.loop[static_cast<std::size_t>(c)];
      auto add = [&](FreeCoefficient::Term term, int freq) {
        FreeCoefficient f{c, term, freq, 0, 0};
        const Rational v = read_coefficient(p, f);
        f.lo = v - radius;
        f.hi = v + radius;
        cfg.free.push_back(std::move(f));
      };
      add(FreeCoefficient::Term::Constant, 0);
      for (int k = 1; k <= fmax; ++k) {
        add(FreeCoefficient::Term::Cos, k);
        add(FreeCoefficient::Term::Sin, k);
      }
    }
  } else {
    std::erase_if(cfg.free, [&](const FreeCoefficient& f) { return f.component < cut; });
  }
  return search(cfg);
}

namespace {

const char* term_name(FreeCoefficient::Term t) {
  switch (t) {
    case FreeCoefficient::Term::Constant: return "const";
    case FreeCoefficient::Term::Cos: return "cos";
    case FreeCoefficient::Term::Sin: return "sin";
  }
  return "const";
}

}  // namespace

Json to_json(const Candidate& c, const SearchConfig& cfg) {
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) coeffs[cfg.free[i].label()] = to_json(c.coefficients[i]);
  Json j{{"restart", c.restart},
         {"coefficients", coeffs},
         {"float_score", c.float_score},
         {"exact_checked", c.exact_checked},
         {"certified", c.certified ? to_json(*c.certified) : Json(nullptr)}};
  Json loop = Json::array();
  for (const auto& p : instantiate(cfg, c.coefficients).loop) loop.push_back(to_json(p));
  j["loop"] = std::move(loop);
  return j;
}

SearchConfig search_config_from_json(const Json& j) {
  std::vector<std::string> errs;
  if (!j.is_object()) throw ValidationError({"search config must be an object"});
  if (!j.contains("template")) throw ValidationError({"template: missing"});
  SearchConfig cfg;
  cfg.templ = validate_spec(j.at("template"));
  auto get_int = [&](const char* key, auto& out) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number_integer()) {
      errs.push_back(std::string(key) + ": expected an integer");
      return;
    }
    out = j.at(key).get<std::remove_reference_t<decltype(out)>>();
  };
  get_int("denominator", cfg.denominator);
  get_int("grid_size", cfg.grid_size);
  get_int("max_iters", cfg.max_iters);
  get_int("restarts", cfg.restarts);
  get_int("seed", cfg.seed);
  get_int("keep_uncertified", cfg.keep_uncertified);
  if (j.contains("threshold")) {
    if (j.at("threshold").is_number()) cfg.threshold = j.at("threshold").get<double>();
    else errs.push_back("threshold: expected a number");
  }
  if (j.contains("certify_all")) cfg.certify_all = j.at("certify_all").get<bool>();
  if (j.contains("objective")) {
    const std::string o = j.at("objective").get<std::string>();
    if (o == "sign_margin") cfg.objective = Objective::SignMargin;
    else if (o == "min_abs") cfg.objective = Objective::MinAbs;
    else errs.push_back("objective: expected sign_margin or min_abs");
  }
  if (j.contains("free")) {
    const Json& fr = j.at("free");
    if (!fr.is_array()) errs.push_back("free: expected an array");
    for (std::size_t i = 0; fr.is_array() && i < fr.size(); ++i) {
      const Json& e = fr[i];
      const std::string where = "free[" + std::to_string(i) + "]";
      try {
        FreeCoefficient f;
        f.component = e.at("component").get<int>();
        const std::string term = e.value("term", std::string("const"));
        if (term == "const") f.term = FreeCoefficient::Term::Constant;
        else if (term == "cos") f.term = FreeCoefficient::Term::Cos;
        else if (term == "sin") f.term = FreeCoefficient::Term::Sin;
        else errs.push_back(where + ".term: expected const, cos or sin");
        f.frequency = e.value("freq", 0);
        f.lo = rational_from_json(e.at("lo"), where + ".lo");
        f.hi = rational_from_json(e.at("hi"), where + ".hi");
        cfg.free.push_back(std::move(f));
      } catch (const ValidationError& v) {
        errs.insert(errs.end(), v.messages().begin(), v.messages().end());
      } catch (const Json::exception&) {
        errs.push_back(where + ": expected {component, term, freq, lo, hi}");
      }
    }
  }
  if (!errs.empty()) throw ValidationError(std::move(errs));
  cfg.validate();
  return cfg;
}

Json to_json(const SearchConfig& cfg) {
  Json free = Json::array();
  for (const auto& f : cfg.free) {
    free.push_back(Json{{"component", f.component}, {"term", term_name(f.term)}, {"freq", f.frequency},
                        {"lo", to_json(f.lo)}, {"hi", to_json(f.hi)}});
  }
  return Json{{"template", to_json(cfg.templ)},
              {"free", free},
              {"denominator", cfg.denominator},
              {"grid_size", cfg.grid_size},
              {"max_iters", cfg.max_iters},
              {"restarts", cfg.restarts},
              {"seed", cfg.seed},
              {"objective", cfg.objective == Objective::SignMargin ? "sign_margin" : "min_abs"},
              {"threshold", cfg.threshold},
              {"keep_uncertified", cfg.keep_uncertified},
              {"certify_all", cfg.certify_all}};
}

}  // namespace freeimm
