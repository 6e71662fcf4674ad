#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace terrafold {

// Exact rational number. All geometry in this project is carried out over
// the rationals; floating point appears only in presentation output (SVG).
using Rat = mpq_class;

// Parses "p", "p/q" or a plain decimal such as "-12.625" into an exact
// rational. No surrounding whitespace, no exponents. Returns nullopt on any
// malformed input (including q == 0).
std::optional<Rat> parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& r);

// Fixed-point decimal rendering for presentation output. Rounds toward zero
// after `digits` fractional digits; trailing zeros and a trailing '.' are
// trimmed. Not a substitute for to_string, which is exact.
std::string to_decimal(const Rat& r, int digits = 6);

}  // namespace terrafold
