#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace ontodp {

/// Identifiers are tokens over ASCII letters, digits, '_' and ':'.
bool is_valid_token(std::string_view token);

/// One (subject, predicate, object) fact.
struct Triple {
  std::string subject;
  std::string predicate;
  std::string object;

  auto operator<=>(const Triple&) const = default;
};

/// Canonical line form: `subject predicate object .`
std::string to_string(const Triple& t);

}  // namespace ontodp
