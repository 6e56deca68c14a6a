#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "occsym/core.hpp"

namespace occsym {

/// Exhaustive integer sums over every symmetric vector of one involution.
/// Raw sums (not ratios) so downstream comparisons stay exact.
struct OracleReport {
    std::int64_t m = 0;
    std::int64_t f = 0;
    std::int64_t total_vectors = 0;  // m^(m/2)
    struct PerK {
        std::int64_t k = 0;
        std::int64_t sum_mk = 0;
        std::int64_t sum_mk_sq = 0;
    };
    std::vector<PerK> per_k;
};

constexpr std::int64_t kDefaultEnumerationLimit = 10'000'000;

/// Number of symmetric vectors, m^(m/2); throws TooLargeError beyond limit.
std::int64_t enumeration_size(std::int64_t m, std::int64_t limit = kDefaultEnumerationLimit);

/// Visits every symmetric vector of psi exactly once, in lexicographic order
/// of the free half (a mixed-radix counter; memory stays O(m)).
void enumerate_vectors(const Involution& psi, const std::function<void(const SymmetricVector&)>& visit,
                       std::int64_t limit = kDefaultEnumerationLimit);

/// Convenience for tiny m: materializes the full enumeration.
std::vector<SymmetricVector> all_vectors(const Involution& psi,
                                         std::int64_t limit = kDefaultEnumerationLimit);

/// Exact sums of m_k and m_k^2 over the whole vector space, for 0 <= k <= k_max.
OracleReport oracle_report(const Involution& psi, std::int64_t k_max,
                           std::int64_t limit = kDefaultEnumerationLimit);

}  // namespace occsym
