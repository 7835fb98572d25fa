#include "lassolab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lassolab/gauss.hpp"

namespace lassolab {

std::uint64_t mix64_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return mix64_finalize(a ^ (0x9E3779B97F4A7C15ULL + mix64_finalize(b)));
}

double normal_quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::invalid_argument("normal_quantile: requires u in (0, 1)");
  }
  // Work on the lower half; 1 - u is exact for u >= 0.5 (Sterbenz).
  const bool upper = u > 0.5;
  const double uu = upper ? 1.0 - u : u;

  double x;
  if (uu >= 0.02425) {
    x = (uu - 0.5) * 2.5066282746310005;  // linearization at the median
  } else {
    // Tail start from -log Phi(x) ~ x^2/2 + log(-x) + log sqrt(2 pi).
    const double l = -std::log(uu);
    double q = std::sqrt(2.0 * l);
    q = std::sqrt(std::max(2.0 * l - 2.0 * std::log(q) - 1.8378770664093455, 1.0));
    x = -q;
  }
  for (int i = 0; i < 16; ++i) {
    const double err = gauss::normal_cdf(x) - uu;
    double step = err / gauss::normal_pdf(x);
    step = std::clamp(step, -1.0, 1.0);
    x -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
  }
  return upper ? -x : x;
}

}  // namespace lassolab
