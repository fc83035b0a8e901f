#include "arud/random.hpp"

#include <algorithm>
#include <cmath>

namespace arud {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t sub) noexcept {
  return mix64(mix64(mix64(seed) ^ index) ^ (sub * 0xD1B54A32D192ED03ull));
}

namespace random {

double uniform01(RandomSource& rng) {
  return static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(RandomSource& rng, std::size_t n) {
  // Rejection keeps the result exactly uniform.
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = -bound % bound;
  std::uint64_t x = rng.next();
  while (x < limit) x = rng.next();
  return static_cast<std::size_t>(x % bound);
}

bool bernoulli(RandomSource& rng, double p) { return uniform01(rng) < p; }

std::size_t geometric_trials(RandomSource& rng, double p) {
  if (p >= 1.0) return 1;
  const double u = uniform01(rng);
  const double k = std::floor(std::log1p(-u) / std::log1p(-p));
  if (!(k < 1e15)) return static_cast<std::size_t>(1e15);
  return 1 + static_cast<std::size_t>(k);
}

std::size_t truncated_geometric(RandomSource& rng, double p, std::size_t max_value) {
  if (max_value == 0 || p >= 1.0) {
    static_cast<void>(rng.next());
    return 0;
  }
  const double log_q = std::log1p(-p);
  const double mass = -std::expm1(static_cast<double>(max_value + 1) * log_q);
  const double u = uniform01(rng);
  const double k = std::floor(std::log1p(-u * mass) / log_q);
  return std::min(max_value, static_cast<std::size_t>(std::max(0.0, k)));
}

}  // namespace random
}  // namespace arud
