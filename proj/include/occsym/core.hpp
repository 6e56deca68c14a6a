#pragma once

#include <cstdint>
#include <vector>

namespace occsym {

using ElementId = std::uint32_t;

/// A validated self-inverse permutation of the element ids 0..m-1.
///
/// Invariants (enforced by validate_involution, which every constructor path
/// goes through): m is even and >= 2, map is a permutation, map[map[i]] == i
/// for every i, and fixed_count is the number of i with map[i] == i.
struct Involution {
    std::int64_t m = 0;
    std::vector<ElementId> map;
    std::int64_t fixed_count = 0;

    ElementId operator()(ElementId i) const { return map[i]; }
};

/// The m/2 free components that determine a symmetric vector.
struct FreeHalf {
    std::vector<ElementId> values;
};

/// A length-m sequence with entries[m-1-j] == psi(entries[j]) for all j.
struct SymmetricVector {
    std::vector<ElementId> entries;

    std::int64_t size() const { return static_cast<std::int64_t>(entries.size()); }
};

/// counts[k] = number of distinct element ids occurring exactly k times,
/// for k = 0..m. Always sums to m, and sum of k*counts[k] is m.
struct OccurrenceProfile {
    std::vector<std::int64_t> counts;
};

/// Checks all Involution invariants and computes the fixed-point count.
/// Throws OddSizeError, NotPermutationError, or NotSelfInverseError, each
/// naming the first offending index; RangeError for m < 2.
Involution validate_involution(std::int64_t m, std::vector<ElementId> map);

/// Deterministic involution with exactly f fixed points: ids 0..f-1 fixed,
/// then consecutive ids paired (f,f+1), (f+2,f+3), ...
/// Requires 0 <= f <= m and m - f even.
Involution canonical_involution(std::int64_t m, std::int64_t f);

/// Seeded random involution with exactly f fixed points. Same preconditions
/// as canonical_involution; used to check that statistics depend only on (m, f).
Involution random_involution(std::int64_t m, std::int64_t f, std::uint64_t seed);

/// Mirror-expands a free half: entries[j] = half[j] for j < m/2 and
/// entries[m-1-j] = psi(half[j]). Bijective between half space and the
/// symmetric vectors of psi.
SymmetricVector expand(const FreeHalf& half, const Involution& psi);

/// Per-element occurrence counts of x, indexed by element id (length m).
std::vector<std::int64_t> occurrence_counts(const SymmetricVector& x);

OccurrenceProfile occurrence_profile(const SymmetricVector& x);

}  // namespace occsym
