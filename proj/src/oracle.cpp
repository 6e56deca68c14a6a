#include "occsym/oracle.hpp"

#include <string>

#include "occsym/errors.hpp"

namespace occsym {

std::int64_t enumeration_size(std::int64_t m, std::int64_t limit) {
    std::int64_t size = 1;
    for (std::int64_t i = 0; i < m / 2; ++i) {
        if (size > limit / m) {
            throw TooLargeError("m^(m/2) exceeds the enumeration limit of " + std::to_string(limit) +
                                " for m = " + std::to_string(m));
        }
        size *= m;
    }
    if (size > limit) {
        throw TooLargeError("m^(m/2) exceeds the enumeration limit of " + std::to_string(limit) +
                            " for m = " + std::to_string(m));
    }
    return size;
}

void enumerate_vectors(const Involution& psi, const std::function<void(const SymmetricVector&)>& visit,
                       std::int64_t limit) {
    enumeration_size(psi.m, limit);
    const std::int64_t half = psi.m / 2;
    FreeHalf h;
    h.values.assign(static_cast<std::size_t>(half), 0);
    SymmetricVector x = expand(h, psi);
    while (true) {
        visit(x);
        // Advance the free half as a base-m counter, rightmost digit fastest,
        // updating both mirrored slots of x in place.
        std::int64_t j = half - 1;
        while (j >= 0) {
            auto& digit = h.values[static_cast<std::size_t>(j)];
            if (digit + 1 < psi.m) {
                ++digit;
                x.entries[static_cast<std::size_t>(j)] = digit;
                x.entries[static_cast<std::size_t>(psi.m - 1 - j)] = psi(digit);
                break;
            }
            digit = 0;
            x.entries[static_cast<std::size_t>(j)] = 0;
            x.entries[static_cast<std::size_t>(psi.m - 1 - j)] = psi(0);
            --j;
        }
        if (j < 0) return;
    }
}

std::vector<SymmetricVector> all_vectors(const Involution& psi, std::int64_t limit) {
    std::vector<SymmetricVector> out;
    out.reserve(static_cast<std::size_t>(enumeration_size(psi.m, limit)));
    enumerate_vectors(psi, [&out](const SymmetricVector& x) { out.push_back(x); }, limit);
    return out;
}

OracleReport oracle_report(const Involution& psi, std::int64_t k_max, std::int64_t limit) {
    if (k_max < 0) throw RangeError("k_max must be non-negative, got " + std::to_string(k_max));
    OracleReport report;
    report.m = psi.m;
    report.f = psi.fixed_count;
    report.total_vectors = enumeration_size(psi.m, limit);
    std::vector<std::int64_t> sum_mk(static_cast<std::size_t>(k_max) + 1, 0);
    std::vector<std::int64_t> sum_mk_sq(static_cast<std::size_t>(k_max) + 1, 0);
    enumerate_vectors(
        psi,
        [&](const SymmetricVector& x) {
            const OccurrenceProfile profile = occurrence_profile(x);
            for (std::int64_t k = 0; k <= k_max && k <= psi.m; ++k) {
                const std::int64_t mk = profile.counts[static_cast<std::size_t>(k)];
                sum_mk[static_cast<std::size_t>(k)] += mk;
                sum_mk_sq[static_cast<std::size_t>(k)] += mk * mk;
            }
        },
        limit);
    for (std::int64_t k = 0; k <= k_max; ++k) {
        report.per_k.push_back({k, sum_mk[static_cast<std::size_t>(k)], sum_mk_sq[static_cast<std::size_t>(k)]});
    }
    return report;
}

}  // namespace occsym
