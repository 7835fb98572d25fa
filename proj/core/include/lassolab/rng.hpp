#pragma once

#include <cstdint>

// Deterministic random number generation with splittable seeding.
//
// The generator is splitmix64: a 64-bit counter advanced by the golden-ratio
// increment and passed through the Stafford mix13 finalizer.  Child streams
// are derived by mix64(parent_seed, index), which applies the same finalizer
// twice, so any (seed, trial) pair maps to a fixed stream independent of
// scheduling or thread count.
//
// Normal variates use a fixed inverse-cdf method: a 52-bit uniform in (0, 1)
// mapped through normal_quantile (Newton iteration on the erfc-based cdf with
// an asymptotic tail start).  Changing either the uniform layout or the
// quantile path is a breaking change to bit-exact reproducibility.

namespace lassolab {

// Stafford mix13 finalizer (the splitmix64 output function).
std::uint64_t mix64_finalize(std::uint64_t z);

// Child-seed derivation: mix64_finalize(a ^ (golden + mix64_finalize(b))).
std::uint64_t mix64(std::uint64_t a, std::uint64_t b);

// Inverse standard normal cdf for u in (0, 1); absolute error ~1e-14 in the
// bulk and full relative precision in the tails.  Throws outside (0, 1).
double normal_quantile(double u);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64_finalize(state_);
  }

  // Uniform on (0, 1): ((bits >> 12) + 0.5) * 2^-52, so the extremes
  // 2^-53 and 1 - 2^-53 are both representable and 0/1 never occur.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
  }

  double next_normal() { return normal_quantile(next_uniform()); }

 private:
  std::uint64_t state_;
};

}  // namespace lassolab
