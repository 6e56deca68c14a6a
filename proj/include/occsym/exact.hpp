#pragma once

#include <cstdint>

#include "occsym/bigrat.hpp"

namespace occsym {

/// Exact rational occurrence statistics for the (m, f, k) triple.
struct ExactStats {
    Rational a;              // mean of m_k(x)/M over all symmetric vectors
    Rational s2_normalized;  // sum of m_k(x)^2, divided by M^(M/2+2)
    Rational variance;       // s2_normalized - a^2, always >= 0
};

/// Mean of m_k(x)/M over the M^(M/2) symmetric vectors of any involution
/// with m elements and f fixed points. Exact rational.
///
/// Closed form: the non-fixed contribution
///   (m-f) * C(m/2,k) * 2^k * (m-2)^(m/2-k) / m^(m/2+1)
/// for every k, plus, when k is even, the fixed-point contribution
///   f * C(m/2,k/2) * (m-1)^(m/2-k/2) / m^(m/2+1).
/// Binomial factors are evaluated first; a zero binomial zeroes the whole
/// term, so out-of-support k never reaches a negative power exponent.
/// Convention 0^0 = 1 (reachable at m = 2).
Rational average_exact(std::int64_t m, std::int64_t f, std::int64_t k);

/// Sum of m_k(x)^2 over all symmetric vectors. Exact (integer-valued) rational.
Rational s2_exact(std::int64_t m, std::int64_t f, std::int64_t k);

/// Variance of m_k(x)/M: s2_exact / m^(m/2+2) - average_exact^2.
Rational variance_exact(std::int64_t m, std::int64_t f, std::int64_t k);

ExactStats exact_stats(std::int64_t m, std::int64_t f, std::int64_t k);

/// Mean squared deviation of m_k(x)/M from an arbitrary center:
/// variance + (average - center)^2, evaluated in exact arithmetic and
/// rounded once at the end.
double second_moment_about(std::int64_t m, std::int64_t f, std::int64_t k, double center);

}  // namespace occsym
