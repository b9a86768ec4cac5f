#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace chebderiv {

/// Arbitrary-precision signed integer.
using ExactInt = mpz_class;

/// Arbitrary-precision rational. Values produced by arithmetic are always in
/// lowest terms with a positive denominator; use make_rational() when
/// building one from a raw numerator/denominator pair.
using ExactRational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on a zero
/// denominator.
ExactRational make_rational(const ExactInt& num, const ExactInt& den);

/// Parses "P/Q" or "P" (optional leading '-'). The result is canonicalized,
/// so "2/4" reads as 1/2. Throws std::invalid_argument on malformed text.
ExactRational parse_rational(std::string_view text);

/// Lowest-terms text form; integers omit the "/1".
std::string to_string(const ExactRational& value);

/// C(m, r). Zero when r < 0 or r > m. Throws std::invalid_argument for m < 0.
ExactInt binomial(std::int64_t m, std::int64_t r);

/// x(x-1)...(x-m+1); 1 when m == 0. Throws std::invalid_argument for m < 0.
ExactInt falling_factorial(std::int64_t x, std::int64_t m);

ExactInt factorial(std::int64_t n);

/// 2^e for e >= 0.
ExactInt pow2(std::int64_t e);

inline ExactInt iverson(bool predicate) { return ExactInt(predicate ? 1 : 0); }

}  // namespace chebderiv
