#include <iostream>

#include <CLI11.hpp>

#include "freeimm/cli.hpp"

int main(int argc, char** argv) {
  using freeimm::CommandRequest;
  using freeimm::Subcommand;

  CLI::App app{"Exact freeness certificates for block-rotation torus maps"};
  app.require_subcommand(1);
  CommandRequest req;
  std::string output;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output, "write JSON output to this path");
    sub->add_flag("--json", req.json, "print JSON instead of the text summary");
  };

  auto* verify = app.add_subcommand("verify", "certify an ansatz spec (file or inline JSON)");
  verify->add_option("input", req.input, "AnsatzSpec or extended spec")->required();
  common(verify);

  auto* repro = app.add_subcommand("repro", "reproduce the built-in published cases");
  repro->add_option("--case", req.cases, "case name (repeatable); default: all");
  repro->add_option("--input", req.input, "run a single case document instead");
  repro->add_option("-j,--jobs", req.jobs, "worker threads")->check(CLI::PositiveNumber);
  repro->add_option("-o,--output", output, "directory for per-case certificate JSON");
  repro->add_flag("--json", req.json, "print JSON instead of the summary table");

  auto* search = app.add_subcommand("search", "seeded hill-climbing search over loop coefficients");
  search->add_option("input", req.input, "SearchConfig")->required();
  search->add_flag("--certify-all", req.certify_all, "exactly verify every emitted candidate");
  search->add_option("-o,--output", output, "also write the candidate stream to this path");

  auto* sturm = app.add_subcommand("sturm", "Sturm sign table and root count of a polynomial");
  sturm->add_option("input", req.input, "coefficients low to high, e.g. '[\"-1\",\"0\",\"1\"]'")->required();
  std::string interval;
  sturm->add_option("--interval", interval, "closed interval \"a,b\"");
  common(sturm);

  auto* collar = app.add_subcommand("collar", "verify a collar profile (default: the built-in one)");
  collar->add_option("input", req.input, "CollarProfile");
  common(collar);

  auto* obstruct = app.add_subcommand("obstruct", "necessary-condition check for the ansatz on T^m");
  obstruct->add_option("--m", req.m, "torus dimension")->required();
  std::string weights;
  obstruct->add_option("--weights", weights, "weight vectors as JSON [[...], ...]");
  common(obstruct);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : freeimm::exit_code::kValidation;
  }

  if (*verify) req.subcommand = Subcommand::Verify;
  if (*repro) req.subcommand = Subcommand::Repro;
  if (*search) req.subcommand = Subcommand::Search;
  if (*sturm) req.subcommand = Subcommand::Sturm;
  if (*collar) req.subcommand = Subcommand::Collar;
  if (*obstruct) req.subcommand = Subcommand::Obstruct;
  if (!output.empty()) req.output_path = output;
  if (!interval.empty()) req.interval = interval;
  if (!weights.empty()) req.weights = weights;
  return freeimm::run(req, std::cout, std::cerr);
}
