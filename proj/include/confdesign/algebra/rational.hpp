#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace confdesign {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonicalizes after every operation).
using Rat = mpq_class;

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rat parse_rat(std::string_view text);

/// n/d in lowest terms (mpq_class's two-argument constructor does not
/// canonicalize).
inline Rat frac(const Int& n, const Int& d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

/// Exact power with a signed exponent (x must be nonzero when k < 0).
Rat pow(const Rat& x, long k);

/// Binomial coefficient C(m, i) for an arbitrary integer m and i >= 0.
Rat binomial(long m, long i);

/// Returns true and sets `root` when x is the square of a rational.
bool rational_sqrt(const Rat& x, Rat& root);

}  // namespace confdesign
