#include "occsym/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "occsym/asymptotic.hpp"
#include "occsym/errors.hpp"

namespace occsym {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

void check_prime_input(std::uint64_t p) {
    if (p < 3 || p > kMaxPrime) {
        throw RangeError("p must lie in [3, 2^61 - 1], got " + std::to_string(p));
    }
    if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (const std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // This witness set is deterministic for n < 3.3 * 10^24.
    for (const std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FactorialProfile factorial_profile(std::uint64_t p) {
    check_prime_input(p);
    FactorialProfile result;
    result.p = p;
    result.residues.reserve(static_cast<std::size_t>(p - 1));
    std::vector<std::int64_t> hits(static_cast<std::size_t>(p), 0);
    std::uint64_t acc = 1;
    for (std::uint64_t n = 1; n < p; ++n) {
        acc = mulmod(acc, n, p);
        result.residues.push_back(acc);
        ++hits[static_cast<std::size_t>(acc)];
    }
    result.profile.counts.assign(static_cast<std::size_t>(p), 0);
    for (std::uint64_t cls = 1; cls < p; ++cls) {
        ++result.profile.counts[static_cast<std::size_t>(hits[static_cast<std::size_t>(cls)])];
    }
    result.distinct_count = static_cast<std::int64_t>(p - 1) - result.profile.counts[0];
    return result;
}

Involution inverse_involution(std::uint64_t p) {
    check_prime_input(p);
    const auto m = static_cast<std::int64_t>(p - 1);
    std::vector<ElementId> map(static_cast<std::size_t>(m));
    for (std::uint64_t cls = 1; cls < p; ++cls) {
        const std::uint64_t inv = powmod(cls, p - 2, p);
        map[static_cast<std::size_t>(cls - 1)] = static_cast<ElementId>(inv - 1);
    }
    return validate_involution(m, std::move(map));
}

std::vector<PoissonComparisonRow> poisson_comparison(const FactorialProfile& profile,
                                                     std::int64_t k_max) {
    const auto m = static_cast<std::int64_t>(profile.p - 1);
    k_max = std::min(k_max, m);  // clipped, per the interface contract
    const double theta = 2.0 / static_cast<double>(m);
    std::vector<PoissonComparisonRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max) + 1);
    for (std::int64_t k = 0; k <= k_max; ++k) {
        PoissonComparisonRow row;
        row.k = k;
        row.empirical_ratio =
            static_cast<double>(profile.profile.counts[static_cast<std::size_t>(k)]) / static_cast<double>(m);
        row.model_ratio = main_term(k, theta);
        row.abs_gap = std::abs(row.empirical_ratio - row.model_ratio);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace occsym
