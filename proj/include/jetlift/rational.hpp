#pragma once

#include <gmpxx.h>

#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jetlift {

using Rational = mpq_class;
using Integer = mpz_class;

/// A caller broke a documented precondition (e.g. a monomial of degree > r).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Shapes of the inputs do not fit together: length or parameter mismatch,
/// an assignment that does not cover its index set, malformed files.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical text form: lowest terms, sign on the numerator, "p/q", or just
/// "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p/q" or "p" with an optional leading sign; the result is
/// canonicalized. Throws StructuralError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Small random rational: numerator in [-9, 9], denominator in [1, 9].
Rational random_rational(std::mt19937_64& rng);

/// Like random_rational, never zero.
Rational random_nonzero_rational(std::mt19937_64& rng);

/// Converts a non-negative Integer that fits in size_t; throws otherwise.
std::size_t to_size(const Integer& n);

}  // namespace jetlift
