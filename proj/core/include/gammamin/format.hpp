#pragma once

#include <ostream>
#include <string>

#include "gammamin/bigreal.hpp"

namespace gammamin {

// `sig_digits` significant decimal digits, round-half-even. Plain decimal
// notation for zero and for magnitudes in [1e-3, 1e3); scientific
// "d.dd...e<sign><exp>" otherwise.
std::string to_string_significant(const BigReal& x, int sig_digits);

// Fixed-point with `decimals` fractional digits, round-half-even. Values that
// round to zero are printed without a sign.
std::string to_string_fixed(const BigReal& x, int decimals);

std::ostream& operator<<(std::ostream& os, const BigReal& x);

}  // namespace gammamin
