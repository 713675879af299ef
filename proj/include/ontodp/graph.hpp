#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontodp/triple.hpp"

namespace ontodp {

/// An immutable set of triples. Triples are kept sorted and deduplicated,
/// so equality and ordering have set semantics regardless of insertion
/// order, and iteration is already canonical.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<Triple> triples);

  const std::vector<Triple>& triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  bool has(const Triple& t) const;

  /// Value-semantic edits: the receiver is never modified.
  Graph with(const Triple& t) const;
  Graph without(const Triple& t) const;

  /// Every subject and object occurring in the graph.
  std::set<std::string> nodes() const;

  auto operator<=>(const Graph&) const = default;

 private:
  std::vector<Triple> triples_;
};

/// True iff every triple of `inner` is in `outer`.
bool contains(const Graph& inner, const Graph& outer);

/// Unbounded edge distance: size of the symmetric difference of the two
/// triple sets. A metric on graphs.
std::size_t edge_distance(const Graph& g1, const Graph& g2);

/// Bounded edge distance: the minimal number of single-edge replacements
/// turning g1 into g2. Replacements preserve cardinality, so graphs of
/// different sizes are unreachable (nullopt). For equal sizes this equals
/// |g1 \ g2| = edge_distance / 2.
std::optional<std::size_t> bounded_edge_distance(const Graph& g1, const Graph& g2);

}  // namespace ontodp
