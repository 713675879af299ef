#include "ontodp/laplace.hpp"

#include <cmath>

#include "ontodp/errors.hpp"

namespace ontodp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ull * (index + 1));
}

double RngStream::next_unit() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double sample_laplace(double scale, RngStream& rng) {
  if (!(scale > 0.0)) throw std::invalid_argument("laplace scale must be positive");
  double u = rng.next_unit() - 0.5;
  while (u == -0.5) u = rng.next_unit() - 0.5;  // ln(0) guard
  if (u == 0.0) return 0.0;
  const double sign = u < 0.0 ? -1.0 : 1.0;
  return -scale * sign * std::log(1.0 - 2.0 * std::abs(u));
}

ReleaseRecord release(const CountQuery& q, const Graph& d, const ReleaseSpec& spec,
                      Semantics semantics) {
  if (!std::isfinite(spec.epsilon) || spec.epsilon <= 0.0)
    throw InvalidEpsilon("epsilon must be a positive finite value");

  const double truth = static_cast<double>(evaluate(q, d));
  ReleaseRecord record;
  record.epsilon = spec.epsilon;
  record.sensitivity = spec.sensitivity;
  record.semantics = semantics;
  record.seed = spec.seed;
  record.rng_algorithm = std::string(kRngAlgorithm);
  if (spec.sensitivity == 0) {
    record.noisy_value = truth;
    record.scale = 0.0;
    record.raw_release = true;
  } else {
    record.scale = static_cast<double>(spec.sensitivity) / spec.epsilon;
    RngStream rng(spec.seed);
    record.noisy_value = truth + sample_laplace(record.scale, rng);
  }
  return record;
}

}  // namespace ontodp
