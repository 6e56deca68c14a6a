#include "occsym/exact.hpp"

#include <cmath>
#include <string>

#include "occsym/errors.hpp"

namespace occsym {

namespace {

void check_args(std::int64_t m, std::int64_t f, std::int64_t k) {
    if (m < 2 || m % 2 != 0) throw RangeError("m must be even and at least 2, got " + std::to_string(m));
    if (f < 0 || f > m) throw RangeError("fixed count " + std::to_string(f) + " out of range for m = " + std::to_string(m));
    if ((m - f) % 2 != 0) {
        throw ParityMismatchError("m - f must be even (m = " + std::to_string(m) + ", f = " + std::to_string(f) + ")");
    }
    if (k < 0 || k > m) throw RangeError("k = " + std::to_string(k) + " out of range for m = " + std::to_string(m));
}

// mult * C(n1,k1) * C(n2,k2) * 2^log2coef * base^exp, with the binomials
// evaluated first: a zero binomial zeroes the term before the power is
// touched (its exponent can be negative out of support).
BigInt term(BigInt mult, std::int64_t n1, std::int64_t k1, std::int64_t n2, std::int64_t k2,
            std::int64_t log2coef, std::int64_t base, std::int64_t exp) {
    if (mult == 0) return 0;
    const BigInt b1 = binomial(n1, k1);
    if (b1 == 0) return 0;
    const BigInt b2 = binomial(n2, k2);
    if (b2 == 0) return 0;
    mult *= b1;
    mult *= b2;
    mult <<= log2coef;
    return mult * int_pow(base, exp);
}

BigInt average_numerator(std::int64_t m, std::int64_t f, std::int64_t k) {
    const std::int64_t h = m / 2;
    BigInt num = term(m - f, h, k, 0, 0, k, m - 2, h - k);
    if (k % 2 == 0) {
        num += term(f, h, k / 2, 0, 0, 0, m - 1, h - k / 2);
    }
    return num;
}

BigInt s2_value(std::int64_t m, std::int64_t f, std::int64_t k) {
    const std::int64_t h = m / 2;
    // Diagonal part m^(m/2+1) * A(k,m) is exactly the average numerator.
    BigInt s2 = average_numerator(m, f, k);
    // Off-diagonal pairs y != y', grouped by how y, y' sit under the involution.
    // Mirror pairs y' = psi(y), both moved:
    s2 += term(m - f, h, k, 0, 0, k, m - 2, h - k);
    // Unrelated moved pairs (y' outside {y, psi(y)}):
    s2 += term(BigInt(m - f) * (m - f - 2), h, k, h - k, k, 2 * k, m - 4, h - 2 * k);
    if (k % 2 == 0) {
        // One element fixed, one moved (factor 2 for the two orderings):
        s2 += term(BigInt(2) * f * (m - f), h, k / 2, h - k / 2, k, k, m - 3, h - 3 * k / 2);
        // Both fixed:
        s2 += term(BigInt(f) * (f - 1), h, k / 2, h - k / 2, k / 2, 0, m - 2, h - k);
    }
    return s2;
}

}  // namespace

Rational average_exact(std::int64_t m, std::int64_t f, std::int64_t k) {
    check_args(m, f, k);
    return Rational(average_numerator(m, f, k), int_pow(m, m / 2 + 1));
}

Rational s2_exact(std::int64_t m, std::int64_t f, std::int64_t k) {
    check_args(m, f, k);
    return Rational(s2_value(m, f, k));
}

Rational variance_exact(std::int64_t m, std::int64_t f, std::int64_t k) {
    check_args(m, f, k);
    const Rational a = average_exact(m, f, k);
    const Rational s2n = Rational(s2_value(m, f, k), int_pow(m, m / 2 + 2));
    return s2n - a * a;
}

ExactStats exact_stats(std::int64_t m, std::int64_t f, std::int64_t k) {
    check_args(m, f, k);
    ExactStats stats;
    stats.a = average_exact(m, f, k);
    stats.s2_normalized = Rational(s2_value(m, f, k), int_pow(m, m / 2 + 2));
    stats.variance = stats.s2_normalized - stats.a * stats.a;
    return stats;
}

double second_moment_about(std::int64_t m, std::int64_t f, std::int64_t k, double center) {
    if (!std::isfinite(center)) throw RangeError("center must be finite");
    const ExactStats stats = exact_stats(m, f, k);
    const Rational c(center);  // exact: a double is a dyadic rational
    const Rational d = stats.a - c;
    return to_double(stats.variance + d * d);
}

}  // namespace occsym
