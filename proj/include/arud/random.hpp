#pragma once

// Seeded randomness with platform-independent distributions. The engines are
// standard; the distributions are written out here because the standard
// library's are implementation-defined and would make generated datasets
// differ between toolchains.

#include <cstdint>
#include <random>

namespace arud {

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual std::uint64_t next() = 0;
};

class Mt64Source final : public RandomSource {
 public:
  explicit Mt64Source(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent per-record seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t sub = 0) noexcept;

namespace random {

/// Uniform on [0, 1) with 53 bits of resolution.
double uniform01(RandomSource& rng);
/// Uniform on {0, ..., n-1}; n must be positive.
std::size_t uniform_index(RandomSource& rng, std::size_t n);
bool bernoulli(RandomSource& rng, double p);
/// Number of trials up to and including the first success: support {1, 2, ...}.
std::size_t geometric_trials(RandomSource& rng, double p);
/// Failures before the first success, conditioned on being <= max_value.
std::size_t truncated_geometric(RandomSource& rng, double p, std::size_t max_value);

}  // namespace random
}  // namespace arud
