#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "ontodp/query.hpp"
#include "ontodp/spaces.hpp"

namespace ontodp {

struct SensitivityResult {
  std::uint64_t value = 0;
  /// No neighbor (or no attack-space pair) contributed: the value 0 above
  /// then means "nothing to hide between", which must stay loudly visible.
  bool empty_neighborhood = false;
  /// A pair of graphs achieving the max, when a neighborhood exists.
  std::optional<std::pair<Graph, Graph>> witness;
};

/// Max |Q(d) - Q(g')| over the defense space of d minus d itself.
/// Exhaustive over the anchored neighborhood, not over the whole space.
SensitivityResult classical_sensitivity(const CountQuery& q, const Graph& d,
                                        const SpaceConfig& cfg);

/// Max over priors anchored at d of the max pairwise |Q difference| within
/// a single attack space — what an inference-aware attacker can observe.
SensitivityResult perceived_sensitivity(const CountQuery& q, const Graph& d,
                                        const SpaceConfig& cfg,
                                        std::size_t cap = kDefaultAntecedentCap);

/// Max |Q(d) - Q(g')| over the onto neighbors of d.
SensitivityResult onto_sensitivity(const CountQuery& q, const Graph& d,
                                   const SpaceConfig& cfg,
                                   std::size_t cap = kDefaultAntecedentCap);

}  // namespace ontodp
