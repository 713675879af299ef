#include "ontodp/spaces.hpp"

#include <stdexcept>

#include "ontodp/errors.hpp"

namespace ontodp {

namespace {

void require_saturated(const Graph& d, const SpaceConfig& cfg) {
  if (!is_saturated(d, cfg.rules, cfg.fixpoint_cap))
    throw NotSaturated("database is not saturated under the configured rules");
}

void require_membership(const Graph& d, const SpaceConfig& cfg) {
  if (!cfg.restrict_to_valid) return;
  const auto violations = validate(d, cfg.schema);
  if (!violations.empty())
    throw SchemaViolation("database is not a member of the valid space: " +
                          to_string(violations.front()));
  require_saturated(d, cfg);
}

}  // namespace

bool space_member(const Graph& g, const SpaceConfig& cfg) {
  if (!cfg.restrict_to_valid) return true;
  return validate(g, cfg.schema).empty() && is_saturated(g, cfg.rules, cfg.fixpoint_cap);
}

std::set<Triple> universe_for(const Graph& g, const SpaceConfig& cfg) {
  if (cfg.universe_override) return *cfg.universe_override;
  return edge_universe(g, cfg.schema);
}

std::set<Graph> defense_space(const Graph& d, const SpaceConfig& cfg) {
  require_membership(d, cfg);
  std::set<Graph> out{d};
  for (const Graph& neighbor : bounded_neighbors(d, universe_for(d, cfg)))
    if (space_member(neighbor, cfg)) out.insert(neighbor);
  return out;
}

std::set<Graph> attack_space(const AttackerInstance& attacker, const SpaceConfig& cfg) {
  const std::set<Triple> universe = universe_for(attacker.prior, cfg);
  std::set<Graph> out;
  for (const Triple& missing : universe) {
    if (attacker.prior.has(missing)) continue;
    Graph candidate = saturate(attacker.prior.with(missing), cfg.rules, cfg.fixpoint_cap);
    if (space_member(candidate, cfg)) out.insert(std::move(candidate));
  }
  return out;
}

std::set<Graph> onto_neighbors(const Graph& d, const SpaceConfig& cfg, std::size_t cap) {
  require_saturated(d, cfg);
  std::set<Graph> out;
  for (const Graph& antecedent : antecedents(d, cfg.rules, cap, cfg.fixpoint_cap)) {
    const std::set<Triple> universe = universe_for(antecedent, cfg);
    for (const Graph& swapped : bounded_neighbors(antecedent, universe)) {
      Graph candidate = saturate(swapped, cfg.rules, cfg.fixpoint_cap);
      if (candidate == d) continue;
      if (space_member(candidate, cfg)) out.insert(std::move(candidate));
    }
  }
  return out;
}

std::set<Graph> anchored_priors(const Graph& d, const SpaceConfig& cfg, std::size_t cap) {
  require_saturated(d, cfg);
  std::set<Graph> priors;
  for (const Graph& antecedent : antecedents(d, cfg.rules, cap, cfg.fixpoint_cap)) {
    const std::set<Triple> universe = universe_for(antecedent, cfg);
    for (const Triple& held_back : antecedent.triples())
      if (universe.count(held_back) != 0) priors.insert(antecedent.without(held_back));
  }
  return priors;
}

std::set<Graph> attacker_union(const Graph& d, const SpaceConfig& cfg, std::size_t cap) {
  std::set<Graph> out;
  for (const Graph& prior : anchored_priors(d, cfg, cap)) {
    const std::set<Graph> space = attack_space({prior}, cfg);
    out.insert(space.begin(), space.end());
  }
  return out;
}

WellSuitedReport check_well_suited(const Graph& d, const SpaceConfig& cfg,
                                   Semantics semantics, std::size_t cap) {
  if (semantics == Semantics::perceived)
    throw std::invalid_argument("perceived semantics has no defense space to check");

  WellSuitedReport report;
  if (semantics == Semantics::classical) {
    report.defense = defense_space(d, cfg);
  } else {
    report.defense = onto_neighbors(d, cfg, cap);
    report.defense.insert(d);
  }
  report.attack_union = attacker_union(d, cfg, cap);

  for (const Graph& g : report.attack_union)
    if (report.defense.count(g) == 0) report.leakage_witnesses.insert(g);
  for (const Graph& g : report.defense)
    if (report.attack_union.count(g) == 0) report.overprotection_witnesses.insert(g);
  report.equal = report.leakage_witnesses.empty() && report.overprotection_witnesses.empty();
  return report;
}

}  // namespace ontodp
