#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontodp/graph.hpp"

namespace ontodp {

struct PredicateSignature {
  std::string subject_type;
  std::string object_type;
  bool is_mutable = true;
};

enum class Comparator { exactly, at_most, at_least };

std::string to_string(Comparator c);

/// Per-(type, predicate) cardinality bound. The count is taken on the side
/// of the predicate whose declared type matches `node_type`: outgoing edges
/// when it is the subject type, incoming edges when it is the object type.
struct CardinalityConstraint {
  std::string node_type;
  std::string predicate;
  Comparator comparator = Comparator::exactly;
  std::uint64_t bound = 0;
};

struct Violation {
  enum class Kind { signature, cardinality };
  Kind kind = Kind::signature;
  std::string node;
  std::string predicate;
  std::string detail;
};

std::string to_string(const Violation& v);

/// Predicate signatures, mutability flags and cardinality constraints.
/// The type predicate (default `hasType`) is implicitly declared and always
/// immutable; its edges are exempt from signature checks.
class Schema {
 public:
  void set_type_predicate(std::string name);
  const std::string& type_predicate() const noexcept { return type_predicate_; }

  void declare_predicate(const std::string& name, PredicateSignature signature);

  /// Throws SchemaViolation if the predicate is undeclared or the type
  /// matches neither side of its signature.
  void add_constraint(CardinalityConstraint constraint);

  bool is_declared(const std::string& predicate) const;
  bool is_mutable(const std::string& predicate) const;
  const PredicateSignature& signature(const std::string& predicate) const;

  const std::map<std::string, PredicateSignature>& predicates() const noexcept {
    return predicates_;
  }
  const std::vector<CardinalityConstraint>& constraints() const noexcept {
    return constraints_;
  }

  /// Types asserted for `node` by type-predicate edges in g.
  std::set<std::string> types_of(const std::string& node, const Graph& g) const;

 private:
  std::string type_predicate_ = "hasType";
  std::map<std::string, PredicateSignature> predicates_;
  std::vector<CardinalityConstraint> constraints_;
};

/// Empty iff every triple matches its predicate signature and every
/// cardinality constraint holds. One record per violation; never throws.
std::vector<Violation> validate(const Graph& g, const Schema& schema);

}  // namespace ontodp
