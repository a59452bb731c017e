#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace lpdec {

/// Exact rational scalar. All decoding, cone and certification arithmetic
/// runs on this type; doubles appear only in channel simulation and report
/// rendering.
using Rat = mpq_class;

/// Canonicalized rational from numerator/denominator (the raw two-argument
/// mpq_class constructor does not reduce the fraction).
Rat make_rat(long num, long den);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
Rat rat_from_string(const std::string& text);

/// Renders as "p" or "p/q" (canonical form, q > 1).
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

/// Parses a comma-separated rational vector, e.g. "2,1,-1/3".
std::vector<Rat> rat_vector_from_string(const std::string& text);

/// Rational enclosure of an irrational (or exact) square root.
struct SqrtEnclosure {
    Rat lower;  // lower <= sqrt(x)
    Rat upper;  // sqrt(x) <= upper
    bool exact; // lower == upper == sqrt(x)
};

/// Encloses sqrt(x) for x >= 0. If x is the square of a rational the result
/// is exact; otherwise Newton refinement from above narrows the interval to
/// a relative width below 2^-precision_bits.
SqrtEnclosure sqrt_enclosure(const Rat& x, unsigned precision_bits = 128);

} // namespace lpdec
