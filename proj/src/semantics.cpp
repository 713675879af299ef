#include "ontodp/semantics.hpp"

#include <stdexcept>

namespace ontodp {

std::string to_string(Semantics s) {
  switch (s) {
    case Semantics::classical: return "classical";
    case Semantics::onto: return "onto";
    case Semantics::perceived: return "perceived";
  }
  return "?";
}

Semantics parse_semantics(std::string_view text) {
  if (text == "classical") return Semantics::classical;
  if (text == "onto") return Semantics::onto;
  if (text == "perceived") return Semantics::perceived;
  throw std::invalid_argument("unknown semantics '" + std::string(text) + "'");
}

}  // namespace ontodp
