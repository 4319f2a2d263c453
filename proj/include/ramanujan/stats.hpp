#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ramanujan/generator.hpp"
#include "ramanujan/prime_table.hpp"
#include "ramanujan/rational.hpp"

namespace ramanujan {

// Share of c-Ramanujan primes among all primes below a limit, with the
// asymptotic ratio of the largest one to its predicted location.
struct DensityReport {
    RationalC c;
    std::uint64_t limit;
    std::uint64_t pi_c;       // c-Ramanujan primes strictly below limit
    std::uint64_t pi;         // primes up to limit
    double actual_density;    // pi_c / pi
    double expected_density;  // 1 - c
    double ratio_last;        // R_{c,pi_c} / p_{floor(pi_c/(1-c))}
};

// Longest runs of c-Ramanujan / non-Ramanujan primes in an interval,
// against the longest-run-of-heads model.
struct RunReport {
    RationalC c;
    std::uint64_t lo, hi;
    std::uint64_t N;  // primes in (lo, hi]
    double P;         // fraction of them that are c-Ramanujan
    std::uint64_t longest_ram_actual, longest_nonram_actual;
    double longest_ram_expected, longest_nonram_expected;
    double variance_ram, variance_nonram;
};

// Requires the list to be complete below limit (its last value at or past
// limit); counts values strictly below limit.
DensityReport density(const RamanujanList& list, const PrimeTable& table,
                      std::uint64_t limit);

// One flag per prime p with lo < p < hi: is p in the list?  Requires the
// list complete through hi.
std::vector<bool> mark_primes(const PrimeTable& table,
                              const RamanujanList& list, std::uint64_t lo,
                              std::uint64_t hi);

// Maximal lengths of all-true and all-false blocks (0 for an absent symbol).
std::pair<std::uint64_t, std::uint64_t> longest_runs(
    const std::vector<bool>& marks);

// Asymptotic expected length of the longest success run in n_tosses
// independent trials with success probability p (natural logs):
//   ln N / ln(1/p) - (1/2 - (ln(1-p) + gamma) / ln(1/p)).
double schilling_expected(std::uint64_t n_tosses, double p);

// Asymptotic variance of that length: pi^2 / (6 ln^2(1/p)) + 1/12.  The
// model's residual terms (|r2| <= 0.00006 plus a vanishing one) are omitted.
double schilling_variance(double p);

// Everything Table-2-style reporting needs for one (c, interval) cell.
RunReport run_report(const PrimeTable& table, const RamanujanList& list,
                     std::uint64_t lo, std::uint64_t hi);

// (n, R_{c,n} / p_{floor(n/(1-c))}) at each checkpoint.
std::vector<std::pair<std::uint64_t, double>> ratio_trend(
    const RamanujanList& list, const PrimeTable& table,
    const std::vector<std::uint64_t>& checkpoints);

}  // namespace ramanujan
