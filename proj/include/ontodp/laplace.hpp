#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "ontodp/query.hpp"
#include "ontodp/semantics.hpp"

namespace ontodp {

/// Stable identifier of the sampling pipeline, recorded in release output
/// so experiments can be reproduced bit-for-bit.
inline constexpr std::string_view kRngAlgorithm =
    "splitmix64-derive/mt19937_64/laplace-inverse-cdf/v1";

/// Independent stream seed for the index-th draw of a seeded experiment
/// (splitmix64 of seed advanced by index+1 golden-ratio steps).
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);

/// Seeded uniform stream. Doubles take the generator's top 53 bits, so
/// draws are identical across platforms and standard-library versions.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double next_unit();

 private:
  std::mt19937_64 gen_;
};

/// One Laplace(0, scale) draw by inverse CDF: with u uniform on
/// (-1/2, 1/2), returns -scale * sgn(u) * ln(1 - 2|u|).
double sample_laplace(double scale, RngStream& rng);

struct ReleaseSpec {
  double epsilon = 0.0;
  std::uint64_t sensitivity = 0;
  std::uint64_t seed = 0;
};

struct ReleaseRecord {
  double noisy_value = 0.0;
  double epsilon = 0.0;
  std::uint64_t sensitivity = 0;
  Semantics semantics = Semantics::classical;
  std::uint64_t seed = 0;
  /// Laplace scale sensitivity/epsilon; 0 when the release was raw.
  double scale = 0.0;
  /// Sensitivity was 0, so the true answer passed through unperturbed.
  bool raw_release = false;
  std::string rng_algorithm;
};

/// Noised query release: evaluate(q, d) + Laplace(sensitivity/epsilon).
/// A sensitivity of 0 returns the raw answer with raw_release set — the
/// degenerate regime the toolkit exists to expose, not an error.
/// Throws InvalidEpsilon if epsilon <= 0 or not finite.
ReleaseRecord release(const CountQuery& q, const Graph& d, const ReleaseSpec& spec,
                      Semantics semantics);

}  // namespace ontodp
