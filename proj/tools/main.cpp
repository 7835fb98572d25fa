#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <stdexcept>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "lassolab: estimator risk laboratory for sparse regression on "
      "ill-conditioned designs"};
  app.require_subcommand(1);
  int exit_code = 0;
  register_verify(app, exit_code);
  register_simulate(app, exit_code);
  register_rates(app, exit_code);
  register_instance(app, exit_code);
  register_risk(app, exit_code);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends carry exit code 0; everything else is usage error.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
  return exit_code;
}
