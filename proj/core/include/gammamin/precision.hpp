#pragma once

#include "gammamin/errors.hpp"

namespace gammamin {

// Requested output precision plus extra guard digits for internal work.
// Every public operation computes at digits+guard significant decimal digits
// and returns values accurate to relative error <= 10^(1-digits).
struct PrecisionConfig {
  int digits = 50;
  int guard = 10;

  void validate() const {
    if (digits < 16) throw DomainError("PrecisionConfig: digits must be >= 16");
    if (guard < 5) throw DomainError("PrecisionConfig: guard must be >= 5");
  }

  int working_digits() const { return digits + guard; }

  // Config for nested calls, so guard digits survive one layer of narrowing.
  PrecisionConfig inner() const { return PrecisionConfig{digits + guard, guard}; }
};

}  // namespace gammamin
