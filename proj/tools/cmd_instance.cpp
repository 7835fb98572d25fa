#include <cstdio>
#include <fstream>
#include <memory>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "commands.hpp"
#include "lassolab/designs.hpp"
#include "lassolab/theory.hpp"

void register_instance(CLI::App& app, int& /*exit_code*/) {
  struct Opts {
    double p = 0.0;
    int n = 0;
    int d = 0;  // 0 = same as n
    double sigma = 1.0;
    double B = 1.0;
    double R = 1.0;
    int s = 1;
    double alpha = 0.0;  // 0 = maximizing choice
    std::string out;     // empty = stdout
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "instance",
      "emit the adversarial design instance and worst-case signal as JSON");
  sub->add_option("--p", opts->p, "sparsity exponent in [0, 1]")
      ->capture_default_str();
  sub->add_option("--n", opts->n, "sample size (required)");
  sub->add_option("--d", opts->d, "dimension (0 = same as n)")
      ->capture_default_str();
  sub->add_option("--sigma", opts->sigma, "noise standard deviation")
      ->capture_default_str();
  sub->add_option("--B", opts->B, "design class bound")->capture_default_str();
  sub->add_option("--R", opts->R, "signal radius (used when p > 0)")
      ->capture_default_str();
  sub->add_option("--s", opts->s, "sparsity level (used when p = 0)")
      ->capture_default_str();
  sub->add_option("--alpha", opts->alpha,
                  "scale ratio (0 = the lower-bound maximizer)")
      ->capture_default_str();
  sub->add_option("--out", opts->out, "output path (default: stdout)");
  finish_subcommand(sub, [opts] {
    if (opts->n <= 0) throw CLI::RequiredError("--n");
    using lassolab::theory::ProblemParams;
    const int d = opts->d > 0 ? opts->d : opts->n;
    const ProblemParams params =
        opts->p == 0.0
            ? ProblemParams::hard(opts->n, d, opts->sigma, opts->B, opts->s)
            : ProblemParams::weak(opts->p, opts->n, d, opts->sigma, opts->B,
                                  opts->R);
    const double alpha = opts->alpha > 0.0
                             ? opts->alpha
                             : lassolab::theory::alpha_star(opts->p, params);
    const auto instance =
        lassolab::designs::make_alpha_instance(opts->n, d, opts->B, alpha);
    const Eigen::VectorXd theta =
        lassolab::theory::worst_theta(opts->p, params, alpha, instance.k);

    nlohmann::ordered_json j;
    lassolab::designs::to_json(j, instance);
    j["theta"] = std::vector<double>(theta.begin(), theta.end());
    const std::string text = j.dump(2) + "\n";
    if (opts->out.empty()) {
      std::fputs(text.c_str(), stdout);
    } else {
      std::ofstream file(opts->out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + opts->out);
      file << text;
      if (!file) throw std::runtime_error("write failed for " + opts->out);
    }
  });
}
