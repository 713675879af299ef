#include "ontodp/rule.hpp"

#include <set>

namespace ontodp {

bool is_variable(std::string_view term) {
  return !term.empty() && term.front() == '?';
}

bool Rule::is_safe() const {
  std::set<std::string, std::less<>> body_vars;
  for (const Atom& a : body) {
    if (is_variable(a.subject)) body_vars.insert(a.subject);
    if (is_variable(a.object)) body_vars.insert(a.object);
  }
  if (is_variable(head.subject) && body_vars.count(head.subject) == 0) return false;
  if (is_variable(head.object) && body_vars.count(head.object) == 0) return false;
  return true;
}

std::string to_string(const Atom& a) {
  return a.predicate + "(" + a.subject + "," + a.object + ")";
}

std::string to_string(const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i > 0) out += " & ";
    out += to_string(r.body[i]);
  }
  out += " => ";
  out += to_string(r.head);
  return out;
}

}  // namespace ontodp
