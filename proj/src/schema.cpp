#include "ontodp/schema.hpp"

#include <map>

#include "ontodp/errors.hpp"

namespace ontodp {

std::string to_string(Comparator c) {
  switch (c) {
    case Comparator::exactly: return "exactly";
    case Comparator::at_most: return "atMost";
    case Comparator::at_least: return "atLeast";
  }
  return "?";
}

std::string to_string(const Violation& v) {
  return v.node + ": " + v.detail;
}

void Schema::set_type_predicate(std::string name) {
  type_predicate_ = std::move(name);
}

void Schema::declare_predicate(const std::string& name, PredicateSignature signature) {
  predicates_[name] = std::move(signature);
}

void Schema::add_constraint(CardinalityConstraint constraint) {
  auto it = predicates_.find(constraint.predicate);
  if (it == predicates_.end())
    throw SchemaViolation("cardinality constraint on undeclared predicate '" +
                          constraint.predicate + "'");
  const PredicateSignature& sig = it->second;
  if (sig.subject_type != constraint.node_type && sig.object_type != constraint.node_type)
    throw SchemaViolation("type '" + constraint.node_type +
                          "' matches neither side of predicate '" +
                          constraint.predicate + "'");
  constraints_.push_back(std::move(constraint));
}

bool Schema::is_declared(const std::string& predicate) const {
  return predicates_.count(predicate) != 0;
}

bool Schema::is_mutable(const std::string& predicate) const {
  if (predicate == type_predicate_) return false;
  auto it = predicates_.find(predicate);
  return it != predicates_.end() && it->second.is_mutable;
}

const PredicateSignature& Schema::signature(const std::string& predicate) const {
  auto it = predicates_.find(predicate);
  if (it == predicates_.end())
    throw SchemaViolation("undeclared predicate '" + predicate + "'");
  return it->second;
}

std::set<std::string> Schema::types_of(const std::string& node, const Graph& g) const {
  std::set<std::string> out;
  for (const Triple& t : g.triples())
    if (t.predicate == type_predicate_ && t.subject == node) out.insert(t.object);
  return out;
}

namespace {

// node -> asserted types, one pass over the graph
std::map<std::string, std::set<std::string>> type_map(const Graph& g,
                                                      const std::string& type_predicate) {
  std::map<std::string, std::set<std::string>> out;
  for (const Triple& t : g.triples())
    if (t.predicate == type_predicate) out[t.subject].insert(t.object);
  return out;
}

bool has_type(const std::map<std::string, std::set<std::string>>& types,
              const std::string& node, const std::string& type) {
  auto it = types.find(node);
  return it != types.end() && it->second.count(type) != 0;
}

bool satisfies(Comparator cmp, std::uint64_t count, std::uint64_t bound) {
  switch (cmp) {
    case Comparator::exactly: return count == bound;
    case Comparator::at_most: return count <= bound;
    case Comparator::at_least: return count >= bound;
  }
  return false;
}

}  // namespace

std::vector<Violation> validate(const Graph& g, const Schema& schema) {
  std::vector<Violation> out;
  const auto types = type_map(g, schema.type_predicate());

  for (const Triple& t : g.triples()) {
    if (t.predicate == schema.type_predicate()) continue;
    if (!schema.is_declared(t.predicate)) {
      out.push_back({Violation::Kind::signature, t.subject, t.predicate,
                     "uses undeclared predicate '" + t.predicate + "'"});
      continue;
    }
    const PredicateSignature& sig = schema.signature(t.predicate);
    if (!has_type(types, t.subject, sig.subject_type))
      out.push_back({Violation::Kind::signature, t.subject, t.predicate,
                     "subject of '" + t.predicate + "' is not a " + sig.subject_type});
    if (!has_type(types, t.object, sig.object_type))
      out.push_back({Violation::Kind::signature, t.object, t.predicate,
                     "object of '" + t.predicate + "' is not a " + sig.object_type});
  }

  for (const CardinalityConstraint& c : schema.constraints()) {
    const PredicateSignature& sig = schema.signature(c.predicate);
    // Count on the side whose declared type matches; subject side wins when
    // both do.
    const bool subject_side = sig.subject_type == c.node_type;
    for (const auto& [node, node_types] : types) {
      if (node_types.count(c.node_type) == 0) continue;
      std::uint64_t count = 0;
      for (const Triple& t : g.triples()) {
        if (t.predicate != c.predicate) continue;
        if (subject_side ? t.subject == node : t.object == node) ++count;
      }
      if (!satisfies(c.comparator, count, c.bound))
        out.push_back({Violation::Kind::cardinality, node, c.predicate,
                       "has " + std::to_string(count) + " " + c.predicate +
                           " edges, constraint (" + c.node_type + ", " + c.predicate +
                           ", " + to_string(c.comparator) + ", " +
                           std::to_string(c.bound) + ")"});
    }
  }
  return out;
}

}  // namespace ontodp
