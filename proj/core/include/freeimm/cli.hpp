#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace freeimm {

enum class Subcommand { Verify, Repro, Search, Sturm, Collar, Obstruct };

struct CommandRequest {
  Subcommand subcommand = Subcommand::Verify;
  std::string input;                       // file path or inline JSON; empty = built-in default
  std::optional<std::string> output_path;  // JSON destination (a directory for repro)
  bool json = false;                       // machine output on stdout
  std::vector<std::string> cases;          // repro --case
  unsigned jobs = 1;                       // repro --jobs
  bool certify_all = false;                // search
  std::optional<std::string> interval;     // sturm --interval "a,b"
  int m = 0;                               // obstruct --m
  std::optional<std::string> weights;      // obstruct --weights
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerdictFailure = 1;
inline constexpr int kValidation = 2;
inline constexpr int kComputation = 3;
}  // namespace exit_code

/// Executes one subcommand. Never throws; every outcome maps to 0..3.
int run(const CommandRequest& req, std::ostream& out, std::ostream& err);

}  // namespace freeimm
