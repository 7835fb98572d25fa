#include "lassolab/mc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <type_traits>

#include "lassolab/gauss.hpp"
#include "lassolab/theory.hpp"

namespace lassolab::mc {

namespace {

// Fixed-tree pairwise sum: the reduction order depends only on the element
// count, never on thread scheduling.
double pairwise_sum(const double* v, std::size_t count) {
  if (count <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) s += v[i];
    return s;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, count - half);
}

struct Evaluator {
  std::string label;
  // trial -> squared l2 error on observation y
  std::function<double(const Eigen::VectorXd& y, std::uint64_t trial)> error;
};

theory::ProblemParams make_params(const ExperimentConfig& config, int n, int d) {
  if (config.p == 0.0) {
    return theory::ProblemParams::hard(n, d, config.sigma, config.B, config.s);
  }
  return theory::ProblemParams::weak(config.p, n, d, config.sigma, config.B,
                                     config.R);
}

template <typename Design>
std::vector<Evaluator> resolve(const ExperimentConfig& config,
                               const Design& design) {
  using estimators::EstimatorSpec;
  constexpr bool kDiagonal =
      std::is_same_v<Design, designs::DiagonalDesign>;
  const Eigen::VectorXd& theta = config.theta_star;
  const int n = design.n();
  const int d = design.d();

  std::vector<Evaluator> out;
  out.reserve(config.estimators.size());
  for (std::size_t e = 0; e < config.estimators.size(); ++e) {
    const EstimatorSpec& spec = config.estimators[e];
    Evaluator ev;
    ev.label = spec.label();
    switch (spec.kind) {
      case EstimatorSpec::Kind::kOls:
        ev.error = [&design, &theta](const Eigen::VectorXd& y, std::uint64_t) {
          return (estimators::ols(design, y) - theta).squaredNorm();
        };
        break;
      case EstimatorSpec::Kind::kLassoFixed:
        if constexpr (kDiagonal) {
          const double lambda = spec.param;
          ev.error = [&design, &theta, lambda](const Eigen::VectorXd& y,
                                               std::uint64_t) {
            return (estimators::lasso_diagonal(design, y, lambda) - theta)
                .squaredNorm();
          };
        } else {
          throw std::invalid_argument(
              "run_experiment: lasso estimators need a diagonal design");
        }
        break;
      case EstimatorSpec::Kind::kLassoOracle:
        if constexpr (kDiagonal) {
          ev.error = [&design, &theta](const Eigen::VectorXd& y,
                                       std::uint64_t) {
            return estimators::oracle_lasso(design, y, theta).error;
          };
        } else {
          throw std::invalid_argument(
              "run_experiment: lasso estimators need a diagonal design");
        }
        break;
      case EstimatorSpec::Kind::kStolsFixed:
      case EstimatorSpec::Kind::kStolsAuto:
      case EstimatorSpec::Kind::kStolsAutoAdaptive: {
        double eta = spec.param;
        if (spec.kind == EstimatorSpec::Kind::kStolsAuto) {
          eta = estimators::stols_eta(make_params(config, n, d));
        } else if (spec.kind == EstimatorSpec::Kind::kStolsAutoAdaptive) {
          eta = estimators::stols_eta_adaptive(make_params(config, n, d),
                                               design);
        }
        ev.error = [&design, &theta, eta](const Eigen::VectorXd& y,
                                          std::uint64_t) {
          return (estimators::stols(design, y, eta) - theta).squaredNorm();
        };
        break;
      }
      case EstimatorSpec::Kind::kLiftedSoft: {
        const double eta = estimators::stols_eta(make_params(config, n, d));
        const estimators::SequenceEstimator inner =
            [eta](const Eigen::VectorXd& v) {
              Eigen::VectorXd out(v.size());
              for (Eigen::Index i = 0; i < v.size(); ++i) {
                out[i] = gauss::soft_threshold(eta, v[i]);
              }
              return out;
            };
        const double sigma = config.sigma;
        const double B = config.B;
        const int draws = spec.draws;
        const std::uint64_t master = config.master_seed;
        ev.error = [&design, &theta, inner, sigma, B, draws, master,
                    e](const Eigen::VectorXd& y, std::uint64_t trial) {
          Rng sub(mix64(mix64(master, trial), 1 + static_cast<std::uint64_t>(e)));
          return (estimators::lift_sequence_estimator(inner, design, y, sigma,
                                                      B, draws, sub) -
                  theta)
              .squaredNorm();
        };
        break;
      }
    }
    out.push_back(std::move(ev));
  }
  return out;
}

void append_row(std::string& out, const TrialSummary& row) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g,", row.n, row.d,
                row.B, row.alpha, row.p);
  out += buf;
  out += row.estimator;
  std::snprintf(buf, sizeof buf, ",%d,%.17g,%.17g,%llu\n", row.trials,
                row.mean_err, row.std_err,
                static_cast<unsigned long long>(row.master_seed));
  out += buf;
}

}  // namespace

int default_trials(int n) { return n < 1024 ? 1000 : 300; }

std::vector<TrialSummary> run_experiment(const ExperimentConfig& config) {
  const int n = std::visit([](const auto& d) { return d.n(); }, config.design);
  const int d = std::visit([](const auto& d) { return d.d(); }, config.design);
  if (config.theta_star.size() != d) {
    throw std::invalid_argument("run_experiment: theta has wrong dimension");
  }
  if (!(config.sigma >= 0.0)) {
    throw std::invalid_argument("run_experiment: requires sigma >= 0");
  }
  if (config.estimators.empty()) {
    throw std::invalid_argument("run_experiment: no estimators given");
  }
  const int trials = config.trials > 0 ? config.trials : default_trials(n);

  const std::vector<Evaluator> evals = std::visit(
      [&config](const auto& des) { return resolve(config, des); },
      config.design);
  const std::size_t n_est = evals.size();

  // errors[e][t]: slot layout is fixed up front, so worker threads write
  // disjoint memory and the later reduction is schedule-independent.
  std::vector<std::vector<double>> errors(n_est);
  for (auto& v : errors) v.assign(trials, 0.0);

  const auto run_range = [&](int lo, int hi) {
    for (int t = lo; t < hi; ++t) {
      Rng rng(mix64(config.master_seed, static_cast<std::uint64_t>(t)));
      const Eigen::VectorXd y = std::visit(
          [&](const auto& des) {
            return designs::sample_observation(des, config.theta_star,
                                               config.sigma, rng);
          },
          config.design);
      for (std::size_t e = 0; e < n_est; ++e) {
        errors[e][t] = evals[e].error(y, static_cast<std::uint64_t>(t));
      }
    }
  };

  int n_threads = config.threads > 0
                      ? config.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
  n_threads = std::clamp(n_threads, 1, trials);
  if (n_threads == 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(n_threads);
    const int chunk = (trials + n_threads - 1) / n_threads;
    for (int i = 0; i < n_threads; ++i) {
      const int lo = i * chunk;
      const int hi = std::min(trials, lo + chunk);
      pool.emplace_back([&, i, lo, hi] {
        try {
          run_range(lo, hi);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  std::vector<TrialSummary> rows;
  rows.reserve(n_est);
  for (std::size_t e = 0; e < n_est; ++e) {
    TrialSummary row;
    row.n = n;
    row.d = d;
    row.B = config.B;
    row.alpha = config.alpha;
    row.p = config.p;
    row.estimator = evals[e].label;
    row.trials = trials;
    row.master_seed = config.master_seed;
    const double mean = pairwise_sum(errors[e].data(), errors[e].size()) / trials;
    row.mean_err = mean;
    if (trials > 1) {
      std::vector<double> sq(trials);
      for (int t = 0; t < trials; ++t) {
        const double dev = errors[e][t] - mean;
        sq[t] = dev * dev;
      }
      const double var = pairwise_sum(sq.data(), sq.size()) / (trials - 1);
      row.std_err = std::sqrt(var / trials);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TrialSummary> sweep(const SweepConfig& config,
                                const std::vector<int>& n_values) {
  std::vector<TrialSummary> rows;
  for (int n : n_values) {
    if (n < 2) throw std::invalid_argument("sweep: requires n >= 2");
    const int d = n;
    const double B = std::sqrt(static_cast<double>(n));
    const theory::ProblemParams params =
        config.p == 0.0
            ? theory::ProblemParams::hard(n, d, config.sigma, B, config.s)
            : theory::ProblemParams::weak(config.p, n, d, config.sigma, B,
                                          config.R);
    const double alpha = theory::alpha_star(config.p, params);
    designs::AlphaInstance instance =
        designs::make_alpha_instance(n, d, B, alpha);
    Eigen::VectorXd theta =
        theory::worst_theta(config.p, params, alpha, instance.k);

    ExperimentConfig run(std::move(instance.design), std::move(theta));
    run.sigma = config.sigma;
    run.B = B;
    run.alpha = alpha;
    run.p = config.p;
    run.R = config.R;
    run.s = config.s;
    run.estimators = config.estimators;
    run.trials = config.trials > 0 ? config.trials : default_trials(n);
    run.master_seed = mix64(config.master_seed, static_cast<std::uint64_t>(n));
    run.threads = config.threads;

    for (TrialSummary& row : run_experiment(run)) {
      row.master_seed = config.master_seed;  // report the user-level seed
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string to_csv(const std::vector<TrialSummary>& rows, bool with_timestamp) {
  std::string out;
  if (with_timestamp) {
    char stamp[64];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(stamp, sizeof stamp, "# generated %Y-%m-%dT%H:%M:%SZ\n",
                  &tm_utc);
    out += stamp;
  }
  out += "n,d,B,alpha,p,estimator,trials,mean_err,stderr,master_seed\n";
  for (const TrialSummary& row : rows) append_row(out, row);
  return out;
}

void write_csv(const std::string& path, const std::vector<TrialSummary>& rows,
               bool with_timestamp) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  out << to_csv(rows, with_timestamp);
  if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

std::string to_svg(const std::vector<TrialSummary>& rows) {
  constexpr int kW = 640, kH = 440;
  constexpr double kL = 70, kR = 610, kT = 30, kB = 390;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b"};

  // Collect per-estimator (n, mean_err) series with positive values.
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  std::vector<std::string> order;
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool any = false;
  for (const TrialSummary& row : rows) {
    if (!(row.mean_err > 0.0) || row.n < 1) continue;
    if (series.find(row.estimator) == series.end()) order.push_back(row.estimator);
    const double x = std::log10(static_cast<double>(row.n));
    const double y = std::log10(row.mean_err);
    series[row.estimator].emplace_back(x, y);
    if (!any) {
      xmin = xmax = x;
      ymin = ymax = y;
      any = true;
    } else {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax - xmin < 1e-9) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-9) ymax = ymin + 1.0;
  const auto px = [&](double x) {
    return kL + (x - xmin) / (xmax - xmin) * (kR - kL);
  };
  const auto py = [&](double y) {
    return kB - (y - ymin) / (ymax - ymin) * (kB - kT);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
      << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << " " << kH
      << "\">\n"
      << "<rect width=\"" << kW << "\" height=\"" << kH
      << "\" fill=\"white\"/>\n"
      << "<line x1=\"" << kL << "\" y1=\"" << kB << "\" x2=\"" << kR
      << "\" y2=\"" << kB << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL
      << "\" y2=\"" << kB << "\" stroke=\"black\"/>\n";

  // Decade ticks on both axes.
  for (int e = static_cast<int>(std::ceil(xmin)); e <= std::floor(xmax); ++e) {
    const double x = px(e);
    svg << "<line x1=\"" << x << "\" y1=\"" << kB << "\" x2=\"" << x
        << "\" y2=\"" << kB + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << x << "\" y=\"" << kB + 20
        << "\" font-size=\"12\" text-anchor=\"middle\">1e" << e << "</text>\n";
  }
  for (int e = static_cast<int>(std::ceil(ymin)); e <= std::floor(ymax); ++e) {
    const double y = py(e);
    svg << "<line x1=\"" << kL - 5 << "\" y1=\"" << y << "\" x2=\"" << kL
        << "\" y2=\"" << y << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << kL - 8 << "\" y=\"" << y + 4
        << "\" font-size=\"12\" text-anchor=\"end\">1e" << e << "</text>\n";
  }
  svg << "<text x=\"" << (kL + kR) / 2 << "\" y=\"" << kH - 8
      << "\" font-size=\"13\" text-anchor=\"middle\">sample size n"
      << "</text>\n"
      << "<text x=\"16\" y=\"" << (kT + kB) / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (kT + kB) / 2 << ")\">mean squared error</text>\n";

  int idx = 0;
  for (const std::string& label : order) {
    auto pts = series[label];
    std::sort(pts.begin(), pts.end());
    const char* color = kColors[idx % 6];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : pts) svg << px(x) << "," << py(y) << " ";
    svg << "\"/>\n";
    for (const auto& [x, y] : pts) {
      svg << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    const double ly = kT + 16 * idx;
    svg << "<line x1=\"" << kR - 150 << "\" y1=\"" << ly << "\" x2=\""
        << kR - 130 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kR - 124 << "\" y=\"" << ly + 4
        << "\" font-size=\"12\">" << label << "</text>\n";
    ++idx;
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_svg(const std::string& path, const std::vector<TrialSummary>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_svg: cannot open " + path);
  out << to_svg(rows);
  if (!out) throw std::runtime_error("write_svg: write failed for " + path);
}

}  // namespace lassolab::mc
