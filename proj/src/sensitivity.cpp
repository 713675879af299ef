#include "ontodp/sensitivity.hpp"

namespace ontodp {

namespace {

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) {
  return a > b ? a - b : b - a;
}

// Max |Q(d) - Q(g')| over a set of neighbors of d.
SensitivityResult anchored_max(const CountQuery& q, const Graph& d,
                               const std::set<Graph>& neighbors) {
  SensitivityResult result;
  if (neighbors.empty()) {
    result.empty_neighborhood = true;
    return result;
  }
  const std::uint64_t base = evaluate(q, d);
  for (const Graph& neighbor : neighbors) {
    const std::uint64_t diff = abs_diff(base, evaluate(q, neighbor));
    if (!result.witness || diff > result.value) {
      result.value = diff;
      result.witness = {d, neighbor};
    }
  }
  return result;
}

}  // namespace

SensitivityResult classical_sensitivity(const CountQuery& q, const Graph& d,
                                        const SpaceConfig& cfg) {
  std::set<Graph> neighbors = defense_space(d, cfg);
  neighbors.erase(d);
  return anchored_max(q, d, neighbors);
}

SensitivityResult perceived_sensitivity(const CountQuery& q, const Graph& d,
                                        const SpaceConfig& cfg, std::size_t cap) {
  SensitivityResult result;
  bool any_pair = false;
  for (const Graph& prior : anchored_priors(d, cfg, cap)) {
    const std::set<Graph> space = attack_space({prior}, cfg);
    if (space.size() < 2) continue;
    // All answers are counts, so the max pairwise gap is max - min.
    const Graph* lo = nullptr;
    const Graph* hi = nullptr;
    std::uint64_t lo_value = 0;
    std::uint64_t hi_value = 0;
    for (const Graph& candidate : space) {
      const std::uint64_t answer = evaluate(q, candidate);
      if (!lo || answer < lo_value) {
        lo = &candidate;
        lo_value = answer;
      }
      if (!hi || answer > hi_value) {
        hi = &candidate;
        hi_value = answer;
      }
    }
    const std::uint64_t spread = hi_value - lo_value;
    if (!any_pair || spread > result.value) {
      result.value = spread;
      result.witness = {*lo, *hi};
    }
    any_pair = true;
  }
  result.empty_neighborhood = !any_pair;
  return result;
}

SensitivityResult onto_sensitivity(const CountQuery& q, const Graph& d,
                                   const SpaceConfig& cfg, std::size_t cap) {
  return anchored_max(q, d, onto_neighbors(d, cfg, cap));
}

}  // namespace ontodp
