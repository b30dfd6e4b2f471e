#pragma once

#include <gmpxx.h>

#include <optional>
#include <random>
#include <string>

namespace leibniz {

/// Exact arbitrary-precision rational, kept reduced with positive denominator.
using Rational = mpq_class;

/// Builds the reduced rational num/den. den must be nonzero.
Rational rat(long num, long den = 1);

/// Parses "p" or "p/q" (optional leading sign, q != 0). Returns nullopt on
/// malformed input or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical rendering: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_string(const Rational& value);

/// Deterministic stream of small rationals: numerator uniform in [-9, 9],
/// denominator uniform in [-9, 9] \ {0}.
class RationalSampler {
public:
    explicit RationalSampler(unsigned long seed) : m_engine(seed) {}

    Rational next();
    Rational next_nonzero();

    /// Uniform integer in [lo, hi].
    long next_int(long lo, long hi);

private:
    std::mt19937_64 m_engine;
};

}  // namespace leibniz
