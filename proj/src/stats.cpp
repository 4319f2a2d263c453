#include "ramanujan/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ramanujan/errors.hpp"

namespace ramanujan {

namespace {

// Pinned at 10 digits; further digits cannot move any rounded table entry.
constexpr double EULER_GAMMA = 0.5772156649;

void require_complete_through(const RamanujanList& list, std::uint64_t point,
                              const char* what) {
    if (list.values.empty() || list.values.back() < point)
        throw std::invalid_argument(
            std::string(what) +
            " needs the list complete through " + std::to_string(point) +
            ", but it ends at " +
            std::to_string(list.values.empty() ? 0 : list.values.back()));
}

}  // namespace

DensityReport density(const RamanujanList& list, const PrimeTable& table,
                      std::uint64_t limit) {
    if (limit < 2)
        throw std::invalid_argument("density limit must be at least 2");
    require_complete_through(list, limit, "density");

    auto below = static_cast<std::uint64_t>(
        std::lower_bound(list.values.begin(), list.values.end(), limit) -
        list.values.begin());
    std::uint64_t primes = table.pi(limit);

    double ratio = std::numeric_limits<double>::quiet_NaN();
    if (below > 0) {
        std::uint64_t idx = list.c.complement().floor_div(below);
        double p_idx = static_cast<double>(
            table.nth_prime(static_cast<double>(idx)));
        ratio = static_cast<double>(list.values[below - 1]) / p_idx;
    }
    return DensityReport{list.c,
                         limit,
                         below,
                         primes,
                         static_cast<double>(below) / static_cast<double>(primes),
                         1.0 - list.c.value(),
                         ratio};
}

std::vector<bool> mark_primes(const PrimeTable& table,
                              const RamanujanList& list, std::uint64_t lo,
                              std::uint64_t hi) {
    if (hi > table.limit())
        throw std::out_of_range("mark_primes to " + std::to_string(hi) +
                                " beyond table limit " +
                                std::to_string(table.limit()));
    std::vector<bool> marks;
    if (hi <= lo + 1) return marks;
    require_complete_through(list, hi, "mark_primes");

    std::size_t next = 0;  // first list entry not yet passed
    for (std::uint64_t k = std::max<std::uint64_t>(lo + 1, 2); k < hi; ++k) {
        if (!table.is_prime(k)) continue;
        while (next < list.values.size() && list.values[next] < k) ++next;
        marks.push_back(next < list.values.size() && list.values[next] == k);
    }
    return marks;
}

std::pair<std::uint64_t, std::uint64_t> longest_runs(
    const std::vector<bool>& marks) {
    std::uint64_t best_true = 0, best_false = 0, run = 0;
    bool current = false;
    for (bool m : marks) {
        run = (m == current) ? run + 1 : 1;
        current = m;
        (current ? best_true : best_false) =
            std::max(current ? best_true : best_false, run);
    }
    return {best_true, best_false};
}

double schilling_expected(std::uint64_t n_tosses, double p) {
    if (n_tosses < 2)
        throw std::invalid_argument("longest-run model needs at least 2 tosses");
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("success probability must lie in (0,1)");
    double li = std::log(1.0 / p);
    return std::log(static_cast<double>(n_tosses)) / li -
           (0.5 - (std::log(1.0 - p) + EULER_GAMMA) / li);
}

double schilling_variance(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("success probability must lie in (0,1)");
    double li = std::log(1.0 / p);
    return std::numbers::pi * std::numbers::pi / (6.0 * li * li) + 1.0 / 12.0;
}

RunReport run_report(const PrimeTable& table, const RamanujanList& list,
                     std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) throw std::invalid_argument("need lo < hi");
    std::vector<bool> marks = mark_primes(table, list, lo, hi);
    auto [ram_run, nonram_run] = longest_runs(marks);

    // Empirical fraction over (lo, hi]; for the canonical decade endpoints
    // (neither 10^5 nor 10^6 is prime) this matches the open-interval marks.
    std::uint64_t n_primes = table.pi(hi) - table.pi(lo);
    auto ram_count = static_cast<std::uint64_t>(
        std::upper_bound(list.values.begin(), list.values.end(), hi) -
        std::upper_bound(list.values.begin(), list.values.end(), lo));
    if (n_primes == 0) throw std::invalid_argument("no primes in interval");
    double p = static_cast<double>(ram_count) / static_cast<double>(n_primes);

    return RunReport{list.c,
                     lo,
                     hi,
                     n_primes,
                     p,
                     ram_run,
                     nonram_run,
                     schilling_expected(n_primes, p),
                     schilling_expected(n_primes, 1.0 - p),
                     schilling_variance(p),
                     schilling_variance(1.0 - p)};
}

std::vector<std::pair<std::uint64_t, double>> ratio_trend(
    const RamanujanList& list, const PrimeTable& table,
    const std::vector<std::uint64_t>& checkpoints) {
    std::vector<std::pair<std::uint64_t, double>> out;
    out.reserve(checkpoints.size());
    for (std::uint64_t n : checkpoints) {
        if (n == 0) throw std::invalid_argument("checkpoint n must be >= 1");
        if (n > list.n_max())
            throw resource_limit_error(
                "checkpoint " + std::to_string(n) +
                " beyond the generated list of " +
                std::to_string(list.n_max()) + " terms");
        std::uint64_t idx = list.c.complement().floor_div(n);
        double p_idx;
        try {
            p_idx = static_cast<double>(
                table.nth_prime(static_cast<double>(idx)));
        } catch (const std::out_of_range& e) {
            throw resource_limit_error(
                "prime table too small for ratio checkpoint " +
                std::to_string(n) + ": " + e.what());
        }
        out.emplace_back(n, static_cast<double>(list.values[n - 1]) / p_idx);
    }
    return out;
}

}  // namespace ramanujan
