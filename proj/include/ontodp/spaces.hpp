#pragma once

#include <cstddef>
#include <optional>
#include <set>

#include "ontodp/graph.hpp"
#include "ontodp/neighborhoods.hpp"
#include "ontodp/rule_engine.hpp"
#include "ontodp/schema.hpp"
#include "ontodp/semantics.hpp"

namespace ontodp {

/// Fixes the valid space of databases all enumerations run in: schema,
/// inference rules, an optional explicit edge universe, and whether
/// membership requires schema validity plus saturation.
struct SpaceConfig {
  Schema schema;
  RuleSet rules;
  std::optional<std::set<Triple>> universe_override;
  bool restrict_to_valid = true;
  std::size_t fixpoint_cap = kDefaultFixpointCap;
};

/// An attacker knowing the rules and a prior. The prior need not itself be
/// a member of the valid space (it typically is not).
struct AttackerInstance {
  Graph prior;
};

/// Membership test for the valid space: passes schema validation and is
/// saturated. Always true when restrict_to_valid is off.
bool space_member(const Graph& g, const SpaceConfig& cfg);

/// The universe_override when set, otherwise the edge universe over g's
/// own nodes.
std::set<Triple> universe_for(const Graph& g, const SpaceConfig& cfg);

/// {d} plus every membership-passing bounded neighbor of d: the set of
/// decoys a curator at bounded distance <= 1 protects with.
std::set<Graph> defense_space(const Graph& d, const SpaceConfig& cfg);

/// Every membership-passing saturation of (prior + one candidate edge):
/// all databases the attacker considers plausible.
std::set<Graph> attack_space(const AttackerInstance& attacker, const SpaceConfig& cfg);

/// Every membership-passing d' != d such that some antecedent of d and some
/// antecedent of d' are bounded neighbors. Enumerated as: swap one edge in
/// each antecedent of d, saturate, filter. Any qualifying antecedent pair
/// is reached this way because the swapped graph is an antecedent of its
/// own saturation by construction.
std::set<Graph> onto_neighbors(const Graph& d, const SpaceConfig& cfg,
                               std::size_t cap = kDefaultAntecedentCap);

/// Every prior that considers d: antecedent-of-d minus one mutable edge.
std::set<Graph> anchored_priors(const Graph& d, const SpaceConfig& cfg,
                                std::size_t cap = kDefaultAntecedentCap);

/// Union of the attack spaces of every prior that considers d.
std::set<Graph> attacker_union(const Graph& d, const SpaceConfig& cfg,
                               std::size_t cap = kDefaultAntecedentCap);

struct WellSuitedReport {
  bool equal = false;
  std::set<Graph> defense;
  std::set<Graph> attack_union;
  /// Graphs attackers consider but the defense does not cover.
  std::set<Graph> leakage_witnesses;
  /// Graphs the defense covers but no attacker considers.
  std::set<Graph> overprotection_witnesses;
};

/// Compares the defense space under the given semantics (classical:
/// bounded neighborhood; onto: {d} + onto neighborhood) against the union
/// of attack spaces anchored at d. Semantics::perceived has no defense
/// space and is rejected.
WellSuitedReport check_well_suited(const Graph& d, const SpaceConfig& cfg,
                                   Semantics semantics,
                                   std::size_t cap = kDefaultAntecedentCap);

}  // namespace ontodp
