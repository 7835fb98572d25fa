#include <cstdio>
#include <memory>

#include "commands.hpp"
#include "lassolab/verification.hpp"

void register_verify(CLI::App& app, int& exit_code) {
  struct Opts {
    double grid_step = 1e-3;
    bool self_test = false;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "verify", "run every analytic check suite and report pass/fail");
  sub->add_option("--grid-step", opts->grid_step,
                  "resolution of the inequality grid on (0, 10]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_flag("--self-test", opts->self_test,
                "inject a known fault; the run must then fail");
  finish_subcommand(sub, [opts, &exit_code] {
    const auto checks =
        lassolab::verify::all_checks(opts->grid_step, opts->self_test);
    int failed = 0;
    for (const auto& c : checks) {
      std::printf("%s  %-28s margin % .3e  %s\n", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.margin, c.statement.c_str());
      if (!c.pass) {
        std::printf("      %s\n", c.detail.c_str());
        ++failed;
      }
    }
    std::printf("%zu checks, %d failed\n", checks.size(), failed);
    if (failed > 0) exit_code = kExitFailure;
  });
}
