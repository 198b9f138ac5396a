#pragma once

#include <cstdint>

#include "numon/errors.hpp"

namespace numon {

/// Element values and coefficients. All arithmetic on monoid elements goes
/// through the checked helpers below; wrapping is never silent.
using Value = std::int64_t;

inline Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out))
    raise(ErrorCode::Overflow, "integer overflow in addition");
  return out;
}

inline Value checked_mul(Value a, Value b) {
  Value out;
  if (__builtin_mul_overflow(a, b, &out))
    raise(ErrorCode::Overflow, "integer overflow in multiplication");
  return out;
}

}  // namespace numon
