#include "occsym/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "occsym/errors.hpp"

namespace occsym {

namespace {

std::vector<bool> membership_mask(std::int64_t m, std::span<const ElementId> ids,
                                  const char* what) {
    std::vector<bool> mask(static_cast<std::size_t>(m), false);
    for (const ElementId id : ids) {
        if (id >= m) throw RangeError(std::string(what) + " contains out-of-range id " + std::to_string(id));
        mask[id] = true;
    }
    return mask;
}

void check_bijection(std::int64_t m, std::span<const ElementId> phi) {
    if (static_cast<std::int64_t>(phi.size()) != m) {
        throw NotBijectionError("phi has " + std::to_string(phi.size()) + " entries, expected " +
                                std::to_string(m));
    }
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        const ElementId v = phi[i];
        if (v >= m || seen[v]) {
            throw NotBijectionError("phi is not a bijection at index " + std::to_string(i));
        }
        seen[v] = true;
    }
}

}  // namespace

std::vector<BandCheck> band_checks(const SymmetricVector& x, std::int64_t k_cap, double mu) {
    if (!(mu > 0.0 && mu < 1.0)) throw RangeError("mu must lie in (0, 1)");
    if (k_cap < 0) throw RangeError("k_cap must be non-negative, got " + std::to_string(k_cap));
    const std::int64_t m = x.size();
    const OccurrenceProfile profile = occurrence_profile(x);
    std::vector<BandCheck> checks;
    checks.reserve(static_cast<std::size_t>(k_cap) + 1);
    for (std::int64_t k = 0; k <= k_cap; ++k) {
        BandCheck c;
        c.k = k;
        const double center = std::exp(-1.0 - std::lgamma(static_cast<double>(k) + 1.0));  // 1/(e*k!)
        c.lower = (1.0 - mu) * center;
        c.upper = (1.0 + mu) * center;
        const std::int64_t mk = k <= m ? profile.counts[static_cast<std::size_t>(k)] : 0;
        c.actual = static_cast<double>(mk) / static_cast<double>(m);
        c.inside = c.lower < c.actual && c.actual < c.upper;
        checks.push_back(c);
    }
    return checks;
}

bool in_exceptional_set(const std::vector<BandCheck>& checks) {
    return std::any_of(checks.begin(), checks.end(), [](const BandCheck& c) { return !c.inside; });
}

std::optional<WitnessPair> find_bounded_occurrence_witness(const SymmetricVector& x,
                                                           std::span<const ElementId> b,
                                                           std::span<const ElementId> phi,
                                                           std::int64_t r, std::int64_t s) {
    if (r < 0 || s < 0) throw RangeError("occurrence bounds must be non-negative");
    const std::int64_t m = x.size();
    check_bijection(m, phi);
    const std::vector<bool> in_b = membership_mask(m, b, "b");
    const std::vector<std::int64_t> occ = occurrence_counts(x);
    for (std::int64_t u = 0; u < m; ++u) {
        if (!in_b[static_cast<std::size_t>(u)]) continue;
        if (occ[static_cast<std::size_t>(u)] > r) continue;
        const ElementId v = phi[static_cast<std::size_t>(u)];
        if (!in_b[v] || occ[v] > s) continue;
        WitnessPair found;
        found.u = static_cast<ElementId>(u);
        found.v = v;
        found.occ_u = occ[static_cast<std::size_t>(u)];
        found.occ_v = occ[v];
        found.u_present = found.occ_u > 0;
        found.v_present = found.occ_v > 0;
        return found;
    }
    return std::nullopt;
}

std::optional<ElementId> find_present_pair_witness(const SymmetricVector& x,
                                                   std::span<const ElementId> b,
                                                   std::span<const ElementId> phi) {
    const std::int64_t m = x.size();
    check_bijection(m, phi);
    const std::vector<bool> in_b = membership_mask(m, b, "b");
    const std::vector<std::int64_t> occ = occurrence_counts(x);
    for (std::int64_t y = 0; y < m; ++y) {
        if (!in_b[static_cast<std::size_t>(y)] || occ[static_cast<std::size_t>(y)] == 0) continue;
        const ElementId img = phi[static_cast<std::size_t>(y)];
        if (in_b[img] && occ[img] > 0) return static_cast<ElementId>(y);
    }
    return std::nullopt;
}

AdversarialPlan adversarial_construction(const SymmetricVector& x, double fraction) {
    if (!(fraction > 0.0 && fraction < 1.0)) throw RangeError("fraction must lie in (0, 1)");
    const std::int64_t m = x.size();
    const std::vector<std::int64_t> occ = occurrence_counts(x);
    // The 1e-9 nudge absorbs binary representation error in fraction * m
    // (e.g. 0.86 * 2000 evaluates just below 1720).
    const auto target = static_cast<std::int64_t>(std::floor(fraction * static_cast<double>(m) + 1e-9));
    std::int64_t absent = 0;
    for (const std::int64_t c : occ) absent += c == 0 ? 1 : 0;
    if (target < absent) {
        throw TooSmallError("fraction * m = " + std::to_string(target) + " is below m_0 = " +
                            std::to_string(absent));
    }

    AdversarialPlan plan;
    plan.b.reserve(static_cast<std::size_t>(target));
    for (std::int64_t id = 0; id < m; ++id) {
        if (occ[static_cast<std::size_t>(id)] == 0) plan.b.push_back(static_cast<ElementId>(id));
    }
    std::vector<ElementId> represented_in_b;
    for (std::int64_t id = 0; id < m && static_cast<std::int64_t>(plan.b.size()) < target; ++id) {
        if (occ[static_cast<std::size_t>(id)] > 0) {
            plan.b.push_back(static_cast<ElementId>(id));
            represented_in_b.push_back(static_cast<ElementId>(id));
        }
    }
    std::sort(plan.b.begin(), plan.b.end());

    plan.phi.resize(static_cast<std::size_t>(m));
    if (static_cast<std::int64_t>(represented_in_b.size()) < m / 2) {
        // Order-preserving matching of b's represented ids into ids outside
        // that set, then the leftover domain onto the leftover codomain.
        std::vector<bool> is_source(static_cast<std::size_t>(m), false);
        for (const ElementId id : represented_in_b) is_source[id] = true;
        std::vector<ElementId> targets;
        targets.reserve(static_cast<std::size_t>(m) - represented_in_b.size());
        for (std::int64_t id = 0; id < m; ++id) {
            if (!is_source[static_cast<std::size_t>(id)]) targets.push_back(static_cast<ElementId>(id));
        }
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        for (std::size_t i = 0; i < represented_in_b.size(); ++i) {
            plan.phi[represented_in_b[i]] = targets[i];
            used[targets[i]] = true;
        }
        std::vector<ElementId> free_codomain;
        for (std::int64_t id = 0; id < m; ++id) {
            if (!used[static_cast<std::size_t>(id)]) free_codomain.push_back(static_cast<ElementId>(id));
        }
        std::size_t next = 0;
        for (std::int64_t id = 0; id < m; ++id) {
            if (!is_source[static_cast<std::size_t>(id)]) plan.phi[static_cast<std::size_t>(id)] = free_codomain[next++];
        }
        plan.feasible = true;
    } else {
        for (std::int64_t id = 0; id < m; ++id) plan.phi[static_cast<std::size_t>(id)] = static_cast<ElementId>(id);
        plan.feasible = false;
    }
    return plan;
}

}  // namespace occsym
