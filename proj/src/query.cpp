#include "ontodp/query.hpp"

#include <set>

#include "ontodp/rule_engine.hpp"

namespace ontodp {

std::uint64_t evaluate(const CountQuery& q, const Graph& g) {
  std::set<std::string> bindings;
  for (const Substitution& s : match_pattern(q.pattern, g))
    bindings.insert(s.at(q.counted_variable));
  return bindings.size();
}

}  // namespace ontodp
