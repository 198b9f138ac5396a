#pragma once

#include <string>
#include <vector>

#include "numon/monoid.hpp"

namespace numon {

/// Compact JSON object {"frobenius": f, "generators": [...]}, keys sorted
/// so parse/re-serialize round-trips byte-identically.
std::string monoid_to_json(const NumericalMonoid& S);

/// Parses a comma-separated integer list ("51,60,160,260"). Surrounding
/// whitespace per token is allowed. Throws std::invalid_argument on
/// malformed input; value-range validation is left to the consumer.
std::vector<Value> parse_value_list(const std::string& text);

}  // namespace numon
