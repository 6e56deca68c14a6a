#pragma once

#include <cstdint>

namespace occsym {

/// Scalar parameters of the large-m regime.
///
/// theta is the fixed-point density f/m. eta bounds the relative error of
/// that density as m grows; for involutions built at an exact density it is
/// carried for completeness but does not change any computed value. delta
/// and dlt describe the concentration window (dlt = m^-delta), with
/// 2*delta + eta < 1 required for the window bound to be nontrivial. mu is
/// the relative half-width of the occurrence bands used by the witness
/// experiments.
struct AsymptoticParams {
    double theta = 0.0;
    double eta = 0.0;
    double delta = 0.25;
    double dlt = 0.0;
    double mu = 0.01;
};

/// Limiting density of m_k/M at fixed-point density theta:
///   (1-theta) / (e * k!)                          for odd k,
/// plus theta / (e^(1/2) * 2^(k/2) * (k/2)!)       for even k.
/// Sums to 1 over k >= 0.
double main_term(std::int64_t k, double theta);

/// Same closed form as average_exact, evaluated through log-gamma so it
/// stays usable for m up to 10^6 and beyond. Each additive term is a single
/// exponential of a summed log, so there is no catastrophic cancellation.
/// Relative error vs. the exact value is below 1e-9 for m <= 64.
double average_log(std::int64_t m, std::int64_t f, std::int64_t k);

/// s2_exact / m^(m/2+2) through the same log-domain route.
double s2_normalized_log(std::int64_t m, std::int64_t f, std::int64_t k);

/// Certified lower bound on the fraction of symmetric vectors with
/// |m_k/M - main_term(k, f/m)| < dlt, from the Chebyshev inequality:
/// clamp(1 - second_moment / dlt^2, 0, 1). Uses exact arithmetic for
/// m <= exact_cutoff and the log-domain path above it.
double chebyshev_bound(std::int64_t m, std::int64_t f, std::int64_t k, double dlt,
                       std::int64_t exact_cutoff = 64);

/// Cumulative unit-Poisson mass (1/e) * sum_{j<=k} 1/j!. Strictly increasing
/// in k with limit 1.
double unit_poisson_cdf(std::int64_t k);

/// Density threshold for the bounded-occurrence witness guarantee:
///   c(r, s, mu) = (3 - (1-mu) * (E(r) + E(s))) / 2
/// with E = unit_poisson_cdf. Requires r, s >= 0, r + s >= 1, 0 < mu < 1.
double witness_density_threshold(std::int64_t r, std::int64_t s, double mu);

/// Exact density at which the present-pair witness guarantee switches on:
/// 1/2 + e^-1 = 0.867879...
double presence_threshold();

}  // namespace occsym
