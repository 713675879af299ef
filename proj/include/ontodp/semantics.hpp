#pragma once

#include <string>
#include <string_view>

namespace ontodp {

/// Which neighborhood notion a sensitivity or defense is computed under.
enum class Semantics { classical, onto, perceived };

std::string to_string(Semantics s);

/// Parses "classical" / "onto" / "perceived"; throws std::invalid_argument
/// on anything else.
Semantics parse_semantics(std::string_view text);

}  // namespace ontodp
