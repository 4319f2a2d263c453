#pragma once

#include <cstdint>
#include <vector>

#include "ramanujan/prime_table.hpp"
#include "ramanujan/rational.hpp"

namespace ramanujan {

// How the defining condition "pi(x) - pi(cx) >= n for all x >= R" is read.
// integer_sweep evaluates it at integer x only (the canonical convention, the
// one the published sequences use); strict_real takes the infimum of the
// count over each real interval [k, k+1).
enum class SweepSemantics { integer_sweep, strict_real };

struct RamanujanList {
    RationalC c;
    std::vector<std::uint64_t> values;  // values[i] is the (i+1)-th term
    std::uint64_t horizon = 0;          // sweep bound actually used
    SweepSemantics semantics = SweepSemantics::integer_sweep;

    std::uint64_t n_max() const { return values.size(); }
};

// Number of primes in (c*k, k], i.e. pi(k) - pi(floor(c*k)).
std::uint64_t interval_count(const PrimeTable& table, RationalC c,
                             std::uint64_t k);

// Infimum of pi(x) - pi(c*x) over real x in [k, k+1):
// pi(k) - #{primes p : p < c*(k+1)}, with the boundary comparison done in
// exact integer arithmetic.
std::uint64_t strict_infimum_count(const PrimeTable& table, RationalC c,
                                   std::uint64_t k);

// First n_max terms of the c-Ramanujan sequence.  Sweeps k = 1..horizon
// maintaining the interval count incrementally; the horizon comes from
// bound_solver and is doubled and re-swept if any recorded level ever abuts
// it, so the result does not depend on bound quality.
RamanujanList generate(RationalC c, std::uint64_t n_max, TablePool& pool,
                       SweepSemantics semantics = SweepSemantics::integer_sweep);

// Like generate, but keeps extending n_max until the last term reaches
// value_limit, so the list is complete over [1, value_limit].
RamanujanList generate_through_value(RationalC c, std::uint64_t value_limit,
                                     TablePool& pool);

// Brute-force check straight from the definition: interval_count(c, k) >= n
// for every k in [candidate, horizon] and interval_count(c, candidate-1) < n.
// The caller is responsible for horizon being a sound upper bound for the
// n-th term.
bool verify_definition(const PrimeTable& table, RationalC c,
                       std::uint64_t candidate, std::uint64_t n,
                       std::uint64_t horizon);

struct SemanticsDip {
    std::uint64_t k;
    std::uint64_t integer_count;
    std::uint64_t strict_count;
};

// Every k <= horizon where the strict reading dips below the integer-sweep
// count in a way that could move some term with index <= n_max.  Empty output
// certifies the two readings agree for this (c, n_max).
std::vector<SemanticsDip> semantics_discrepancy_scan(const PrimeTable& table,
                                                     RationalC c,
                                                     std::uint64_t n_max,
                                                     std::uint64_t horizon);

}  // namespace ramanujan
