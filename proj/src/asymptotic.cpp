#include "occsym/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "occsym/errors.hpp"
#include "occsym/exact.hpp"

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

double log_binomial(std::int64_t n, std::int64_t k) {
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

// mult * C(n1,k1) * C(n2,k2) * 2^log2coef * base^exp / m^norm as a single
// exponential. Zero binomials and a zero multiplier vanish before the power
// is considered; base 0 contributes 1 when exp == 0 (only reachable at small m).
double log_term(std::int64_t m, double mult, std::int64_t n1, std::int64_t k1, std::int64_t n2,
                std::int64_t k2, std::int64_t log2coef, std::int64_t base, std::int64_t exp,
                std::int64_t norm) {
    if (mult <= 0.0) return 0.0;
    if (k1 < 0 || k1 > n1 || k2 < 0 || k2 > n2) return 0.0;
    double lg = std::log(mult) + log_binomial(n1, k1) + log_binomial(n2, k2) +
                static_cast<double>(log2coef) * std::numbers::ln2 -
                static_cast<double>(norm) * std::log(static_cast<double>(m));
    if (base == 0) {
        if (exp != 0) return 0.0;
    } else {
        lg += static_cast<double>(exp) * std::log(static_cast<double>(base));
    }
    return std::exp(lg);
}

}  // namespace

double main_term(std::int64_t k, double theta) {
    if (k < 0) throw RangeError("k must be non-negative, got " + std::to_string(k));
    if (!(theta >= 0.0 && theta <= 1.0)) throw RangeError("theta must lie in [0, 1]");
    double value = (1.0 - theta) * std::exp(-1.0 - std::lgamma(static_cast<double>(k) + 1.0));
    if (k % 2 == 0) {
        const double j = static_cast<double>(k / 2);
        value += theta * std::exp(-0.5 - j * std::numbers::ln2 - std::lgamma(j + 1.0));
    }
    return value;
}

double average_log(std::int64_t m, std::int64_t f, std::int64_t k) {
    check_args(m, f, k);
    const std::int64_t h = m / 2;
    double value = log_term(m, static_cast<double>(m - f), h, k, 0, 0, k, m - 2, h - k, h + 1);
    if (k % 2 == 0) {
        value += log_term(m, static_cast<double>(f), h, k / 2, 0, 0, 0, m - 1, h - k / 2, h + 1);
    }
    return value;
}

double s2_normalized_log(std::int64_t m, std::int64_t f, std::int64_t k) {
    check_args(m, f, k);
    const std::int64_t h = m / 2;
    double value = average_log(m, f, k) / static_cast<double>(m);
    value += log_term(m, static_cast<double>(m - f), h, k, 0, 0, k, m - 2, h - k, h + 2);
    value += log_term(m, static_cast<double>(m - f) * static_cast<double>(m - f - 2), h, k, h - k,
                      k, 2 * k, m - 4, h - 2 * k, h + 2);
    if (k % 2 == 0) {
        value += log_term(m, 2.0 * static_cast<double>(f) * static_cast<double>(m - f), h, k / 2,
                          h - k / 2, k, k, m - 3, h - 3 * k / 2, h + 2);
        value += log_term(m, static_cast<double>(f) * static_cast<double>(f - 1), h, k / 2,
                          h - k / 2, k / 2, 0, m - 2, h - k, h + 2);
    }
    return value;
}

double chebyshev_bound(std::int64_t m, std::int64_t f, std::int64_t k, double dlt,
                       std::int64_t exact_cutoff) {
    check_args(m, f, k);
    if (!(dlt > 0.0)) throw RangeError("window width must be positive");
    const double center = main_term(k, static_cast<double>(f) / static_cast<double>(m));
    double m2;
    if (m <= exact_cutoff) {
        m2 = second_moment_about(m, f, k, center);
    } else {
        const double a = average_log(m, f, k);
        m2 = center * center - 2.0 * center * a + s2_normalized_log(m, f, k);
    }
    return std::clamp(1.0 - m2 / (dlt * dlt), 0.0, 1.0);
}

double unit_poisson_cdf(std::int64_t k) {
    if (k < 0) throw RangeError("k must be non-negative, got " + std::to_string(k));
    double sum = 0.0;
    double inv_fact = 1.0;
    for (std::int64_t j = 0; j <= k; ++j) {
        if (j > 0) inv_fact /= static_cast<double>(j);
        sum += inv_fact;
    }
    return sum * std::exp(-1.0);
}

double witness_density_threshold(std::int64_t r, std::int64_t s, double mu) {
    if (r < 0 || s < 0 || r + s < 1) {
        throw RangeError("need r, s >= 0 with r + s >= 1");
    }
    if (!(mu > 0.0 && mu < 1.0)) throw RangeError("mu must lie in (0, 1)");
    return 0.5 * (3.0 - (1.0 - mu) * (unit_poisson_cdf(r) + unit_poisson_cdf(s)));
}

double presence_threshold() { return 0.5 + std::exp(-1.0); }

}  // namespace occsym
