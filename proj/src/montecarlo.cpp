#include "occsym/montecarlo.hpp"

#include <cmath>
#include <string>
#include <thread>

#include "occsym/asymptotic.hpp"
#include "occsym/errors.hpp"
#include "occsym/rng.hpp"

namespace occsym {

SymmetricVector sample_vector(const Involution& psi, std::uint64_t trial_seed) {
    SplitMix64 rng(trial_seed);
    FreeHalf half;
    half.values.resize(static_cast<std::size_t>(psi.m / 2));
    for (auto& v : half.values) {
        v = static_cast<ElementId>(rng.bounded(static_cast<std::uint64_t>(psi.m)));
    }
    return expand(half, psi);
}

namespace {

struct Accumulator {
    std::vector<std::int64_t> sum_mk;
    std::vector<std::int64_t> sum_mk_sq;
    std::vector<std::int64_t> within;

    explicit Accumulator(std::size_t buckets)
        : sum_mk(buckets, 0), sum_mk_sq(buckets, 0), within(buckets, 0) {}

    void merge(const Accumulator& other) {
        for (std::size_t i = 0; i < sum_mk.size(); ++i) {
            sum_mk[i] += other.sum_mk[i];
            sum_mk_sq[i] += other.sum_mk_sq[i];
            within[i] += other.within[i];
        }
    }
};

// Occurrence counting without materializing the full vector: each free
// component x contributes one occurrence of x and one of psi(x), which is
// exactly the profile of the expanded vector.
void run_trials(const Involution& psi, std::int64_t k_max, std::int64_t lo, std::int64_t hi,
                std::uint64_t seed, double window, const std::vector<double>& centers,
                Accumulator& acc) {
    const std::int64_t m = psi.m;
    std::vector<std::int64_t> occ(static_cast<std::size_t>(m));
    std::vector<std::int64_t> hist(static_cast<std::size_t>(m) + 1);
    for (std::int64_t t = lo; t < hi; ++t) {
        SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
        std::fill(occ.begin(), occ.end(), 0);
        for (std::int64_t j = 0; j < m / 2; ++j) {
            const auto v = static_cast<ElementId>(rng.bounded(static_cast<std::uint64_t>(m)));
            ++occ[v];
            ++occ[psi(v)];
        }
        std::fill(hist.begin(), hist.end(), 0);
        for (const std::int64_t c : occ) ++hist[static_cast<std::size_t>(c)];
        for (std::int64_t k = 0; k <= k_max; ++k) {
            const std::int64_t mk = k <= m ? hist[static_cast<std::size_t>(k)] : 0;
            acc.sum_mk[static_cast<std::size_t>(k)] += mk;
            acc.sum_mk_sq[static_cast<std::size_t>(k)] += mk * mk;
            const double ratio = static_cast<double>(mk) / static_cast<double>(m);
            if (std::abs(ratio - centers[static_cast<std::size_t>(k)]) < window) {
                ++acc.within[static_cast<std::size_t>(k)];
            }
        }
    }
}

}  // namespace

SampleSummary estimate(const Involution& psi, std::int64_t k_max, std::int64_t trials,
                       std::uint64_t seed, double window, int jobs) {
    if (trials < 1) throw RangeError("trials must be at least 1, got " + std::to_string(trials));
    if (k_max < 0) throw RangeError("k_max must be non-negative, got " + std::to_string(k_max));
    if (!(window > 0.0)) throw RangeError("window width must be positive");
    if (jobs < 1) jobs = 1;

    const double theta = static_cast<double>(psi.fixed_count) / static_cast<double>(psi.m);
    std::vector<double> centers(static_cast<std::size_t>(k_max) + 1);
    for (std::int64_t k = 0; k <= k_max; ++k) {
        centers[static_cast<std::size_t>(k)] = main_term(k, theta);
    }

    const std::size_t buckets = static_cast<std::size_t>(k_max) + 1;
    Accumulator total(buckets);
    const int workers = static_cast<int>(std::min<std::int64_t>(jobs, trials));
    if (workers <= 1) {
        run_trials(psi, k_max, 0, trials, seed, window, centers, total);
    } else {
        std::vector<Accumulator> parts(static_cast<std::size_t>(workers), Accumulator(buckets));
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            const std::int64_t lo = trials * w / workers;
            const std::int64_t hi = trials * (w + 1) / workers;
            threads.emplace_back(run_trials, std::cref(psi), k_max, lo, hi, seed, window,
                                 std::cref(centers), std::ref(parts[static_cast<std::size_t>(w)]));
        }
        for (auto& th : threads) th.join();
        for (const auto& part : parts) total.merge(part);
    }

    SampleSummary summary;
    summary.trials = trials;
    summary.seed = seed;
    summary.window = window;
    const double n = static_cast<double>(trials);
    const double md = static_cast<double>(psi.m);
    for (std::int64_t k = 0; k <= k_max; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double s1 = static_cast<double>(total.sum_mk[i]);
        const double s2 = static_cast<double>(total.sum_mk_sq[i]);
        SampleSummary::PerK row;
        row.k = k;
        row.mean_ratio = s1 / (n * md);
        row.sample_variance = trials > 1 ? (s2 - s1 * s1 / n) / (md * md * (n - 1.0)) : 0.0;
        row.within_window_fraction = static_cast<double>(total.within[i]) / n;
        summary.per_k.push_back(row);
    }
    return summary;
}

}  // namespace occsym
