#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tightspan {

/// Exact arbitrary-precision rational. All core computations use this type;
/// there is no floating point anywhere in the library.
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal). Canonicalizes to lowest terms.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& text);

/// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& value);

bool rat_is_integer(const Rat& value);

/// Integer value of an integral rational. Throws if not integral or out of range.
long rat_to_long(const Rat& value);

inline Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

/// num/den in canonical form. The mpq_class(num, den) constructor does not
/// reduce, and GMP comparisons require reduced operands; always build
/// rationals from possibly non-coprime parts through this helper.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// 2^-k as an exact dyadic rational, k >= 0.
Rat dyadic(int k);

/// Largest integer multiple of `step` that is <= x (step > 0).
Rat floor_to_multiple(const Rat& x, const Rat& step);

/// ceil(x) for rationals.
long rat_ceil_long(const Rat& x);

std::string function_to_string(const std::vector<Rat>& values);

}  // namespace tightspan
