#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "commands.hpp"
#include "lassolab/mc.hpp"

namespace {

std::vector<lassolab::estimators::EstimatorSpec> parse_estimators(
    const std::string& text) {
  std::vector<lassolab::estimators::EstimatorSpec> specs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!part.empty()) specs.push_back(lassolab::estimators::EstimatorSpec::parse(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (specs.empty()) throw std::invalid_argument("no estimators given");
  return specs;
}

std::string svg_path(const std::string& csv_path) {
  if (csv_path.size() > 4 && csv_path.substr(csv_path.size() - 4) == ".csv") {
    return csv_path.substr(0, csv_path.size() - 4) + ".svg";
  }
  return csv_path + ".svg";
}

}  // namespace

void register_simulate(CLI::App& app, int& /*exit_code*/) {
  struct Opts {
    double p = 0.0;
    double sigma = 1.0;
    double R = 1.0;
    int s = 1;
    int trials = 0;
    int threads = 0;
    std::vector<int> n{64, 256, 1024, 4096};
    std::uint64_t seed = 0;
    std::string estimators = "lasso:oracle,stols:auto";
    std::string out = "simulate.csv";
    bool plot = false;
    bool timestamp = false;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "simulate",
      "sweep sample sizes over the adversarial-scaling instance (d = n, "
      "B = sqrt(n), worst-case signal) and write per-estimator risk to CSV");
  sub->add_option("--p", opts->p, "sparsity exponent in [0, 1]")
      ->capture_default_str();
  sub->add_option("--n", opts->n, "comma list of sample sizes")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--s", opts->s, "sparsity level (used when p = 0)")
      ->capture_default_str();
  sub->add_option("--R", opts->R, "signal radius (used when p > 0)")
      ->capture_default_str();
  sub->add_option("--sigma", opts->sigma, "noise standard deviation")
      ->capture_default_str();
  sub->add_option("--trials", opts->trials,
                  "trials per sweep point (0 = per-size default)")
      ->capture_default_str();
  sub->add_option("--seed", opts->seed, "master seed")->capture_default_str();
  sub->add_option("--estimators", opts->estimators,
                  "comma list: ols | lasso:<lambda> | lasso:oracle | "
                  "stols:<eta> | stols:auto | stols:auto-adaptive | "
                  "lifted:soft:<draws>")
      ->capture_default_str();
  sub->add_option("--out", opts->out, "output CSV path")->capture_default_str();
  sub->add_flag("--plot", opts->plot, "also write a log-log SVG next to the CSV");
  sub->add_option("--threads", opts->threads, "worker threads (0 = hardware)")
      ->capture_default_str();
  sub->add_flag("--timestamp", opts->timestamp,
                "prepend a generation-time comment to the CSV");
  finish_subcommand(sub, [opts] {
    lassolab::mc::SweepConfig cfg;
    cfg.p = opts->p;
    cfg.sigma = opts->sigma;
    cfg.R = opts->R;
    cfg.s = opts->s;
    cfg.estimators = parse_estimators(opts->estimators);
    cfg.trials = opts->trials;
    cfg.master_seed = opts->seed;
    cfg.threads = opts->threads;
    const auto rows = lassolab::mc::sweep(cfg, opts->n);
    lassolab::mc::write_csv(opts->out, rows, opts->timestamp);
    std::printf("wrote %zu rows to %s\n", rows.size(), opts->out.c_str());
    if (opts->plot) {
      const std::string svg = svg_path(opts->out);
      lassolab::mc::write_svg(svg, rows);
      std::printf("wrote plot to %s\n", svg.c_str());
    }
  });
}
