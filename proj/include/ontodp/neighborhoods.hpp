#pragma once

#include <set>

#include "ontodp/graph.hpp"
#include "ontodp/schema.hpp"

namespace ontodp {

enum class Direction { add, remove, both };

/// Every triple (s, p, o) with p mutable, s and o nodes of g, and the types
/// of s and o (per the type predicate) matching p's signature. Triples
/// already in g are included. No new nodes are ever invented: the entity
/// population is closed. Throws SchemaViolation if g uses an undeclared
/// predicate.
std::set<Triple> edge_universe(const Graph& g, const Schema& schema);

/// Graphs at unbounded distance exactly 1 from g: single additions of
/// universe \ g and/or single removals of g ∩ universe. The universe is
/// expected to cover the mutable triples of g, so g ∩ universe is exactly
/// its perturbable part.
std::set<Graph> unbounded_neighbors(const Graph& g, const std::set<Triple>& universe,
                                    Direction direction);

/// Graphs (g \ {e}) ∪ {e'} with e ∈ g ∩ universe and e' ∈ universe \ g —
/// exactly the graphs sharing the sub-graph g \ {e} at unbounded distance 1
/// from both sides. g itself is never included.
std::set<Graph> bounded_neighbors(const Graph& g, const std::set<Triple>& universe);

}  // namespace ontodp
