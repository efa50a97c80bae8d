#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freeimm/ansatz.hpp"
#include "freeimm/json_io.hpp"
#include "freeimm/verifier.hpp"

namespace freeimm {

/// One searchable coefficient of the template loop.
struct FreeCoefficient {
  enum class Term { Constant, Cos, Sin };
  int component = 0;
  Term term = Term::Constant;
  int frequency = 0;  // ignored for Constant
  Rational lo;
  Rational hi;

  std::string label() const;  // "v3.cos2"
};

enum class Objective { SignMargin, MinAbs };

struct SearchConfig {
  AnsatzSpec templ;
  std::vector<FreeCoefficient> free;
  long denominator = 1000;  // coefficients live on the grid Z / denominator
  int grid_size = 0;        // z samples; 0 selects 4 * max frequency + 1
  int max_iters = 50;       // hill-climbing sweeps per restart
  int restarts = 4;         // restart 0 starts from the template values
  std::uint64_t seed = 0;
  Objective objective = Objective::SignMargin;
  double threshold = 0.0;   // scores above this are certified exactly
  int keep_uncertified = 3; // best uncertified candidates kept in the output
  bool certify_all = false;

  /// Resolved sample count (applies the 4 * max frequency + 1 floor).
  int samples() const;
  /// Throws ValidationError.
  void validate() const;
};

struct Candidate {
  int restart = 0;
  std::vector<Rational> coefficients;  // one per free coefficient
  double float_score = 0.0;
  bool exact_checked = false;
  /// Present only when the exact pipeline returned FREE.
  std::optional<FreenessCertificate> certified;
};

/// Floating-point min |D(z_i)| over n equispaced z in [0, 2 pi).
double scan_determinant(const AnsatzSpec& spec, int n);

/// Objective value of a spec on n samples.
double score(const AnsatzSpec& spec, int n, Objective objective);

/// Writes coefficient values into a copy of the template.
AnsatzSpec instantiate(const SearchConfig& cfg, const std::vector<Rational>& values);

/// Deterministic restarts + coordinate hill climbing. Output is ordered by
/// restart index; duplicate end points are reported once.
std::vector<Candidate> search(const SearchConfig& cfg);

/// Freezes the first prefix.size() loop components and searches the rest.
/// When cfg.free is empty, every constant/cos/sin term up to the template's
/// maximum frequency in the suffix is freed within +/- radius of its
/// template value.
std::vector<Candidate> complete_loop(const std::vector<TrigPoly>& prefix, SearchConfig cfg,
                                     const Rational& radius = 1);

Json to_json(const Candidate& c, const SearchConfig& cfg);
SearchConfig search_config_from_json(const Json& j);
Json to_json(const SearchConfig& cfg);

}  // namespace freeimm
