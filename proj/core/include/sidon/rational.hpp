#pragma once

// Exact arithmetic helpers shared by every module.
//
// All densities in this library are exact rationals backed by GMP. Decimal
// text is produced only for presentation, and always with an explicit
// rounding direction so that enclosures stay valid after printing.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sidon {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for inputs outside an operation's documented domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two independent computations that must agree do not.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Rounding { down, up };

Integer ipow(std::uint64_t base, unsigned exponent);

/// Largest k with base^k <= n. Requires n >= 1 and base >= 2.
unsigned floor_log(std::uint64_t n, std::uint64_t base);

/// Always "numerator/denominator", including "/1" for integers.
std::string to_fraction_string(const Rational& value);

/// Accepts "p/q" or "p" (optionally signed). Result is canonicalized.
Rational parse_fraction(std::string_view text);

/// Accepts decimal or scientific notation ("0.0001", "5e-5", "2.5E-3")
/// as well as "p/q"; the result is the exact value of the literal.
Rational parse_decimal(std::string_view text);

/// Fixed-point rendering with `digits` fractional digits, rounded toward
/// -infinity (down) or +infinity (up).
std::string to_decimal(const Rational& value, unsigned digits,
                       Rounding rounding = Rounding::down);

/// Nearest double, for human-facing summaries and float comparisons.
double to_double(const Rational& value);

}  // namespace sidon
