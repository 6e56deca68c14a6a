#include "occsym/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "occsym/errors.hpp"
#include "occsym/rng.hpp"

namespace occsym {

Involution validate_involution(std::int64_t m, std::vector<ElementId> map) {
    if (m < 2) throw RangeError("involution size must be at least 2, got " + std::to_string(m));
    if (m % 2 != 0) throw OddSizeError("involution size must be even, got " + std::to_string(m));
    if (static_cast<std::int64_t>(map.size()) != m) {
        throw NotPermutationError("map has " + std::to_string(map.size()) + " entries, expected " +
                                  std::to_string(m));
    }
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (std::int64_t i = 0; i < m; ++i) {
        const ElementId v = map[static_cast<std::size_t>(i)];
        if (v >= m || seen[v]) {
            throw NotPermutationError("map is not a permutation at index " + std::to_string(i));
        }
        seen[v] = true;
    }
    std::int64_t fixed = 0;
    for (std::int64_t i = 0; i < m; ++i) {
        const ElementId v = map[static_cast<std::size_t>(i)];
        if (map[v] != static_cast<ElementId>(i)) {
            throw NotSelfInverseError("map is not self-inverse at index " + std::to_string(i));
        }
        if (v == static_cast<ElementId>(i)) ++fixed;
    }
    return Involution{m, std::move(map), fixed};
}

namespace {

void check_fixed_count(std::int64_t m, std::int64_t f) {
    if (m < 2 || m % 2 != 0) throw RangeError("m must be even and at least 2, got " + std::to_string(m));
    if (f < 0 || f > m) throw RangeError("fixed count " + std::to_string(f) + " out of range for m = " + std::to_string(m));
    if ((m - f) % 2 != 0) {
        throw ParityMismatchError("m - f must be even (m = " + std::to_string(m) + ", f = " + std::to_string(f) + ")");
    }
}

}  // namespace

Involution canonical_involution(std::int64_t m, std::int64_t f) {
    check_fixed_count(m, f);
    std::vector<ElementId> map(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < f; ++i) map[static_cast<std::size_t>(i)] = static_cast<ElementId>(i);
    for (std::int64_t i = f; i < m; i += 2) {
        map[static_cast<std::size_t>(i)] = static_cast<ElementId>(i + 1);
        map[static_cast<std::size_t>(i + 1)] = static_cast<ElementId>(i);
    }
    return Involution{m, std::move(map), f};
}

Involution random_involution(std::int64_t m, std::int64_t f, std::uint64_t seed) {
    check_fixed_count(m, f);
    std::vector<ElementId> ids(static_cast<std::size_t>(m));
    std::iota(ids.begin(), ids.end(), ElementId{0});
    SplitMix64 rng(seed);
    // Fisher-Yates with the library's own generator, so results are stable
    // across platforms.
    for (std::size_t i = ids.size(); i > 1; --i) {
        std::swap(ids[i - 1], ids[rng.bounded(i)]);
    }
    std::vector<ElementId> map(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < f; ++i) map[ids[static_cast<std::size_t>(i)]] = ids[static_cast<std::size_t>(i)];
    for (std::int64_t i = f; i < m; i += 2) {
        map[ids[static_cast<std::size_t>(i)]] = ids[static_cast<std::size_t>(i + 1)];
        map[ids[static_cast<std::size_t>(i + 1)]] = ids[static_cast<std::size_t>(i)];
    }
    return Involution{m, std::move(map), f};
}

SymmetricVector expand(const FreeHalf& half, const Involution& psi) {
    const std::int64_t m = psi.m;
    if (static_cast<std::int64_t>(half.values.size()) != m / 2) {
        throw LengthMismatchError("free half has " + std::to_string(half.values.size()) +
                                  " entries, expected " + std::to_string(m / 2));
    }
    SymmetricVector x;
    x.entries.resize(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m / 2; ++j) {
        const ElementId v = half.values[static_cast<std::size_t>(j)];
        if (v >= m) throw RangeError("free half entry " + std::to_string(v) + " out of range at index " + std::to_string(j));
        x.entries[static_cast<std::size_t>(j)] = v;
        x.entries[static_cast<std::size_t>(m - 1 - j)] = psi(v);
    }
    return x;
}

std::vector<std::int64_t> occurrence_counts(const SymmetricVector& x) {
    std::vector<std::int64_t> occ(x.entries.size(), 0);
    for (const ElementId v : x.entries) ++occ[v];
    return occ;
}

OccurrenceProfile occurrence_profile(const SymmetricVector& x) {
    const std::vector<std::int64_t> occ = occurrence_counts(x);
    OccurrenceProfile profile;
    profile.counts.assign(x.entries.size() + 1, 0);
    for (const std::int64_t c : occ) ++profile.counts[static_cast<std::size_t>(c)];
    return profile;
}

}  // namespace occsym
