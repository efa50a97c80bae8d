#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freeimm/ansatz.hpp"
#include "freeimm/json_io.hpp"

namespace freeimm {

/// One published-versus-computed comparison.
struct Comparison {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct CaseReport {
  std::string name;
  std::vector<Comparison> checks;
  Json certificate;  // the case's certificate document
  double seconds = 0.0;

  bool passed() const;
  /// "name = actual" lines, e.g. "D(pi) = -31/1".
  std::vector<std::string> summary_lines() const;
};

struct ReproReport {
  std::vector<CaseReport> cases;

  bool passed() const;
  /// Aligned text table: case | check | expected | actual | status.
  std::string summary_table() const;
};

/// Runs one fixture document (any kind: ansatz, extended, collar).
CaseReport run_case_document(const Json& doc);

/// Runs a built-in case by name.
CaseReport run_case(std::string_view name);

/// Runs the given built-in cases (all when empty) in registry order.
/// Cases are independent and run on up to `jobs` threads.
ReproReport repro_paper(const std::vector<std::string>& names = {}, unsigned jobs = 1);

/// The built-in ansatz spec of a case (t2, t3, ...).
AnsatzSpec builtin_spec(std::string_view name);

/// Weight set of the built-in critical map on T^m (m = 2..5).
std::optional<WeightSet> builtin_weight_set(int m);

}  // namespace freeimm
