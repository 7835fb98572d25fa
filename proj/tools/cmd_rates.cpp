#include <cstdio>
#include <memory>
#include <vector>

#include "commands.hpp"
#include "lassolab/theory.hpp"

void register_rates(CLI::App& app, int& /*exit_code*/) {
  struct Opts {
    double p = 0.0;
    std::vector<int> n{256};
    int d = 0;  // 0 = same as n
    double sigma = 1.0;
    double B = 1.0;
    double R = 1.0;
    int s = 1;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "rates", "print the minimax rate core and its constant bracket as CSV");
  sub->add_option("--p", opts->p, "sparsity exponent in [0, 1]")
      ->capture_default_str();
  sub->add_option("--n", opts->n, "comma list of sample sizes")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--d", opts->d, "dimension (0 = same as n)")
      ->capture_default_str();
  sub->add_option("--sigma", opts->sigma, "noise standard deviation")
      ->capture_default_str();
  sub->add_option("--B", opts->B, "design class bound")->capture_default_str();
  sub->add_option("--R", opts->R, "signal radius (used when p > 0)")
      ->capture_default_str();
  sub->add_option("--s", opts->s, "sparsity level (used when p = 0)")
      ->capture_default_str();
  finish_subcommand(sub, [opts] {
    using lassolab::theory::ProblemParams;
    std::printf(
        "p,n,d,sigma,B,R_or_s,rate_core,lower_const,upper_const,regime_ok\n");
    for (int n : opts->n) {
      const int d = opts->d > 0 ? opts->d : n;
      const ProblemParams params =
          opts->p == 0.0
              ? ProblemParams::hard(n, d, opts->sigma, opts->B, opts->s)
              : ProblemParams::weak(opts->p, n, d, opts->sigma, opts->B,
                                    opts->R);
      const auto report = lassolab::theory::minimax_rate(params);
      const double r_or_s =
          opts->p == 0.0 ? static_cast<double>(opts->s) : opts->R;
      std::printf("%.17g,%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n",
                  opts->p, n, d, opts->sigma, opts->B, r_or_s, report.value,
                  report.lower_const, report.upper_const,
                  report.regime_ok ? 1 : 0);
    }
  });
}
