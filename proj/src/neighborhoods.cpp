#include "ontodp/neighborhoods.hpp"

#include <map>

#include "ontodp/errors.hpp"

namespace ontodp {

std::set<Triple> edge_universe(const Graph& g, const Schema& schema) {
  for (const Triple& t : g.triples())
    if (t.predicate != schema.type_predicate() && !schema.is_declared(t.predicate))
      throw SchemaViolation("graph uses undeclared predicate '" + t.predicate + "'");

  // Bucket nodes by asserted type once.
  std::map<std::string, std::set<std::string>> nodes_of_type;
  for (const Triple& t : g.triples())
    if (t.predicate == schema.type_predicate()) nodes_of_type[t.object].insert(t.subject);

  std::set<Triple> universe;
  for (const auto& [name, sig] : schema.predicates()) {
    if (!sig.is_mutable || name == schema.type_predicate()) continue;
    auto subjects = nodes_of_type.find(sig.subject_type);
    auto objects = nodes_of_type.find(sig.object_type);
    if (subjects == nodes_of_type.end() || objects == nodes_of_type.end()) continue;
    for (const std::string& s : subjects->second)
      for (const std::string& o : objects->second) universe.insert({s, name, o});
  }
  return universe;
}

std::set<Graph> unbounded_neighbors(const Graph& g, const std::set<Triple>& universe,
                                    Direction direction) {
  std::set<Graph> out;
  if (direction == Direction::add || direction == Direction::both) {
    for (const Triple& e : universe)
      if (!g.has(e)) out.insert(g.with(e));
  }
  if (direction == Direction::remove || direction == Direction::both) {
    for (const Triple& e : g.triples())
      if (universe.count(e) != 0) out.insert(g.without(e));
  }
  return out;
}

std::set<Graph> bounded_neighbors(const Graph& g, const std::set<Triple>& universe) {
  std::set<Graph> out;
  for (const Triple& removed : g.triples()) {
    if (universe.count(removed) == 0) continue;
    const Graph core = g.without(removed);
    for (const Triple& added : universe) {
      if (g.has(added)) continue;
      out.insert(core.with(added));
    }
  }
  return out;
}

}  // namespace ontodp
