#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ontodp/triple.hpp"

namespace ontodp {

/// Terms starting with '?' are variables; everything else is a constant.
bool is_variable(std::string_view term);

/// Atom of a rule body/head or of a query pattern.
struct Atom {
  std::string predicate;
  std::string subject;
  std::string object;

  auto operator<=>(const Atom&) const = default;
};

/// Positive conjunctive Horn rule: body atoms => one head atom.
/// No negation, no built-ins, and heads never create fresh individuals,
/// which keeps saturation a monotone finite fixpoint.
struct Rule {
  std::vector<Atom> body;
  Atom head;

  /// Safety: every variable of the head occurs in the body.
  bool is_safe() const;

  auto operator<=>(const Rule&) const = default;
};

struct RuleSet {
  std::vector<Rule> rules;

  bool empty() const noexcept { return rules.empty(); }
};

std::string to_string(const Atom& a);
std::string to_string(const Rule& r);

}  // namespace ontodp
