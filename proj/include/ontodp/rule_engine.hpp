#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontodp/graph.hpp"
#include "ontodp/rule.hpp"

namespace ontodp {

using Substitution = std::map<std::string, std::string>;

inline constexpr std::size_t kDefaultFixpointCap = 100000;
inline constexpr std::size_t kDefaultAntecedentCap = 20;

/// Every total substitution of the pattern's variables mapping all atoms
/// into triples of g. Order-independent set.
std::set<Substitution> match_pattern(const std::vector<Atom>& pattern, const Graph& g);

std::set<Substitution> match(const Rule& rule, const Graph& g);

/// Applies a total substitution to an atom. The substitution must bind
/// every variable of the atom.
Triple instantiate(const Atom& atom, const Substitution& s);

/// Least fixpoint of g under the rules, computed semi-naively (per round,
/// only matches touching the previous round's delta are re-derived).
/// Terminates because no new constants are created; throws
/// FixpointBudgetExceeded if the closure grows past triple_cap.
Graph saturate(const Graph& g, const RuleSet& rules,
               std::size_t triple_cap = kDefaultFixpointCap);

bool is_saturated(const Graph& g, const RuleSet& rules,
                  std::size_t triple_cap = kDefaultFixpointCap);

/// All sub-graphs of g that saturate back to g; always contains g.
/// Only triples unifying with some rule head are candidates for removal
/// (removing any other triple can never re-derive it under monotone rules).
/// Failing removal sets prune all their supersets. Throws NotSaturated if g
/// is not saturated, AntecedentBudgetExceeded if the candidate set exceeds
/// cap.
std::set<Graph> antecedents(const Graph& g, const RuleSet& rules,
                            std::size_t cap = kDefaultAntecedentCap,
                            std::size_t triple_cap = kDefaultFixpointCap);

}  // namespace ontodp
