#include "ontodp/triple.hpp"

namespace ontodp {

bool is_valid_token(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == ':';
    if (!ok) return false;
  }
  return true;
}

std::string to_string(const Triple& t) {
  return t.subject + " " + t.predicate + " " + t.object + " .";
}

}  // namespace ontodp
