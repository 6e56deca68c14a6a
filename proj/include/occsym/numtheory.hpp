#pragma once

#include <cstdint>
#include <vector>

#include "occsym/core.hpp"

namespace occsym {

/// Occurrence statistics of the factorial sequence 1!, 2!, ..., (p-1)! mod p
/// over the p-1 nonzero residue classes.
struct FactorialProfile {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> residues;  // residues[n-1] = n! mod p, n = 1..p-1
    OccurrenceProfile profile;            // counts over the classes 1..p-1
    std::int64_t distinct_count = 0;      // (p-1) - m_0
};

struct PoissonComparisonRow {
    std::int64_t k = 0;
    double empirical_ratio = 0.0;
    double model_ratio = 0.0;
    double abs_gap = 0.0;
};

/// Deterministic Miller-Rabin, valid for all n < 2^63.
bool is_prime(std::uint64_t n);

/// Requires p prime with 3 <= p <= 2^61 - 1 (products use 128-bit
/// intermediates). Residues come from a running product mod p; the last one
/// is always p-1 (Wilson).
FactorialProfile factorial_profile(std::uint64_t p);

/// The involution on the p-1 nonzero residue classes sending each class to
/// its modular inverse; id i stands for class i+1. Always has exactly two
/// fixed points (classes 1 and p-1).
Involution inverse_involution(std::uint64_t p);

/// Side-by-side empirical ratios m_k/(p-1) and the model density
/// main_term(k, theta = 2/(p-1)). Report-only: the Poisson behavior of the
/// factorials is an open conjecture, so nothing here asserts agreement, and
/// the juxtaposition is heuristic (the factorial sequence is not itself one
/// of the model's symmetric vectors).
std::vector<PoissonComparisonRow> poisson_comparison(const FactorialProfile& profile,
                                                     std::int64_t k_max);

}  // namespace occsym
