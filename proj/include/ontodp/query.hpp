#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ontodp/graph.hpp"
#include "ontodp/rule.hpp"

namespace ontodp {

/// COUNT DISTINCT of one variable over a conjunctive pattern.
struct CountQuery {
  std::vector<Atom> pattern;
  std::string counted_variable;
  bool distinct = true;
};

/// Number of distinct bindings of the counted variable over all matches of
/// the full pattern in g.
std::uint64_t evaluate(const CountQuery& q, const Graph& g);

}  // namespace ontodp
