#pragma once

#include <cstdint>
#include <vector>

#include "occsym/core.hpp"

namespace occsym {

/// Empirical per-k occurrence statistics from seeded sampling.
///
/// Reproducibility contract: identical (psi, k_max, trials, seed, window)
/// produce a bit-identical summary regardless of the worker count, because
/// every trial derives its own generator from mix_seed(seed, trial) and the
/// aggregation carries exact integer counts; floating point enters only in
/// the final normalization.
struct SampleSummary {
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double window = 0.0;
    struct PerK {
        std::int64_t k = 0;
        double mean_ratio = 0.0;
        double sample_variance = 0.0;          // unbiased; 0 when trials == 1
        double within_window_fraction = 0.0;   // |m_k/M - main_term(k, f/m)| < window
    };
    std::vector<PerK> per_k;
};

/// One uniform draw from the symmetric vectors of psi: the m/2 free
/// components are i.i.d. uniform over the m element ids, generated from a
/// SplitMix64 stream seeded with trial_seed.
SymmetricVector sample_vector(const Involution& psi, std::uint64_t trial_seed);

/// Runs `trials` independent samples (trial t seeded with mix_seed(seed, t))
/// and aggregates per-k mean ratios, unbiased sample variances, and the
/// fraction of trials inside the concentration window. `jobs` only splits
/// the work; it never changes the result.
SampleSummary estimate(const Involution& psi, std::int64_t k_max, std::int64_t trials,
                       std::uint64_t seed, double window, int jobs = 1);

}  // namespace occsym
