#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "occsym/core.hpp"

namespace occsym {

/// One occurrence-band membership check: actual = m_k(x)/M against the
/// relative band (1 +- mu)/(e*k!). inside <=> lower < actual < upper.
struct BandCheck {
    std::int64_t k = 0;
    double lower = 0.0;
    double upper = 0.0;
    double actual = 0.0;
    bool inside = false;
};

/// A bounded-occurrence witness: u in b with occ(u) <= r, and v = phi(u)
/// in b with occ(v) <= s. Occurrence 0 qualifies; the presence flags report
/// whether each element actually appears in x.
struct WitnessPair {
    ElementId u = 0;
    ElementId v = 0;
    std::int64_t occ_u = 0;
    std::int64_t occ_v = 0;
    bool u_present = false;
    bool v_present = false;
};

/// The tightness construction: b holds every unrepresented id plus the
/// smallest represented ids up to floor(fraction * m) total. When fewer than
/// m/2 represented ids land in b, phi maps them (order-preservingly) into
/// ids outside that set, completed deterministically to a bijection, and no
/// present-pair witness can exist; otherwise phi is the identity and
/// `feasible` is false.
struct AdversarialPlan {
    std::vector<ElementId> b;
    std::vector<ElementId> phi;
    bool feasible = false;
};

/// Band checks for k = 0..k_cap. x lies in the exceptional set iff any
/// check has inside == false. Requires 0 < mu < 1.
std::vector<BandCheck> band_checks(const SymmetricVector& x, std::int64_t k_cap, double mu);

bool in_exceptional_set(const std::vector<BandCheck>& checks);

/// Smallest-id u in b with occ(u) <= r, phi(u) in b, and occ(phi(u)) <= s.
/// phi must be a permutation of the element ids (NotBijectionError otherwise).
std::optional<WitnessPair> find_bounded_occurrence_witness(const SymmetricVector& x,
                                                           std::span<const ElementId> b,
                                                           std::span<const ElementId> phi,
                                                           std::int64_t r, std::int64_t s);

/// Smallest y in b occurring in x such that phi(y) is in b and occurs in x.
std::optional<ElementId> find_present_pair_witness(const SymmetricVector& x,
                                                   std::span<const ElementId> b,
                                                   std::span<const ElementId> phi);

/// Requires 0 < fraction < 1 and floor(fraction * m) >= m_0(x) (TooSmallError).
AdversarialPlan adversarial_construction(const SymmetricVector& x, double fraction);

}  // namespace occsym
