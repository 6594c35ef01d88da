// Command-line front end. Links only the shared library through the C
// API; all numerics live behind conelab.h.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage/config error.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conelab/conelab.h"

namespace {

int finish(conelab_status st, conelab_result* res) {
  if (st != CONELAB_OK) {
    std::fprintf(stderr, "error: %s\n", conelab_last_error());
    conelab_result_free(res);
    // A rejected hypothesis is a failed check, not a usage error.
    return st == CONELAB_ECHECK ? 1 : 2;
  }
  std::fputs(conelab_result_summary(res), stdout);
  const int rc = conelab_result_passed(res) ? 0 : 1;
  conelab_result_free(res);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conelab: locally convex cone laws and Hyers-Ulam "
               "stabilization of approximately quadratic maps"};
  app.require_subcommand(1);

  std::string cone = "all";
  std::string expr;
  std::string config_path;
  std::string out_path;
  std::string format;
  double epsilon = 1.0;
  double tol = 1e-9;
  double radius = 2.0;
  int max_iter = 40;
  unsigned long long seed = 2026;

  auto* laws = app.add_subcommand("laws", "run cone/order/neighborhood law "
                                          "batteries for a named cone");
  laws->add_option("--cone", cone,
                   "cone name (extended-real, nonneg-extended-real, "
                   "vector-<d>, function, two-point-pathology) or 'all'");

  auto* stab = app.add_subcommand("stabilize",
                                  "stabilize an approximately quadratic map");
  stab->add_option("--expr", expr, "map as an expression in x1..xd")
      ->required();
  stab->add_option("--epsilon", epsilon, "scale of the hypothesis gate")
      ->check(CLI::PositiveNumber);
  stab->add_option("--tol", tol, "numerical tolerance")
      ->check(CLI::PositiveNumber);
  stab->add_option("--max-iter", max_iter, "iteration cap (0..40)")
      ->check(CLI::Range(0, 40));
  stab->add_option("--seed", seed, "sample-grid seed");

  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep from a "
                                            "config file and write a report");
  sweep->add_option("--config", config_path, "INI config with a [sweep] section")
      ->required();
  sweep->add_option("--out", out_path, "report path (overrides config)");
  sweep->add_option("--format", format, "report format (overrides config)")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  auto* banach = app.add_subcommand("banach", "verify the normed-cone "
                                              "telescoping and eps/3 bounds");
  banach->add_option("--expr", expr, "map as an expression in x1..xd")
      ->required();
  banach->add_option("--epsilon", epsilon, "scale of the hypothesis gate")
      ->check(CLI::PositiveNumber);
  banach->add_option("--tol", tol, "numerical tolerance")
      ->check(CLI::PositiveNumber);
  banach->add_option("--radius", radius, "membership radius factor r > 1")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  conelab_result* res = nullptr;
  if (laws->parsed()) {
    const conelab_status st = conelab_laws_run(cone.c_str(), &res);
    return finish(st, res);
  }

  if (stab->parsed()) {
    const conelab_status st = conelab_stabilize_run(expr.c_str(), epsilon, tol,
                                                    max_iter, seed, &res);
    return finish(st, res);
  }

  if (sweep->parsed()) {
    std::ifstream is(config_path, std::ios::binary);
    if (!is) {
      std::fprintf(stderr, "error: cannot open config file %s\n",
                   config_path.c_str());
      return 2;
    }
    std::ostringstream ss;
    ss << is.rdbuf();
    const std::string text = ss.str();
    const conelab_status st = conelab_sweep_run(
        text.c_str(), out_path.empty() ? nullptr : out_path.c_str(),
        format.empty() ? nullptr : format.c_str(), &res);
    return finish(st, res);
  }

  if (banach->parsed()) {
    const conelab_status st =
        conelab_banach_run(expr.c_str(), epsilon, radius, tol, &res);
    return finish(st, res);
  }

  return 2;  // unreachable with require_subcommand(1)
}
