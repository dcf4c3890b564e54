#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace svlie {

/// Exact arbitrary-precision rational; GMP keeps it in lowest terms after
/// every arithmetic operation.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q" or "p" (no denominator when it is 1).
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace svlie
