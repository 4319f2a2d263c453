#include "ramanujan/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ramanujan/bounds.hpp"
#include "ramanujan/errors.hpp"

namespace ramanujan {

namespace {

// One pass of k = 1..horizon maintaining the chosen count incrementally.
// Returns last_at[j] = largest k with count(k) == j, for j < levels (0 when
// the level was never visited).  The running floor/boundary streams use
// remainder tracking so the loop is pure integer adds and compares; the
// equivalence with floor_mul / the boundary comparison is property-tested.
std::vector<std::uint64_t> sweep_levels(const PrimeTable& table, RationalC c,
                                        std::uint64_t levels,
                                        std::uint64_t horizon,
                                        SweepSemantics semantics) {
    if (horizon + (semantics == SweepSemantics::strict_real ? 1 : 0) >
        table.limit())
        throw std::out_of_range("sweep horizon " + std::to_string(horizon) +
                                " beyond table limit " +
                                std::to_string(table.limit()));
    std::vector<std::uint64_t> last_at(levels, 0);
    const std::uint64_t num = c.numerator(), den = c.denominator();
    std::uint64_t s = 0;
    if (semantics == SweepSemantics::integer_sweep) {
        // hi = floor(c*k); rem = num*k - hi*den stays in [0, den).
        std::uint64_t hi = 0, rem = 0;
        for (std::uint64_t k = 1; k <= horizon; ++k) {
            s += table.is_prime(k);
            rem += num;
            if (rem >= den) {
                rem -= den;
                ++hi;  // hi just entered (c*(k-1), c*k]
                s -= table.is_prime(hi);
            }
            if (s < levels) last_at[s] = k;
        }
    } else {
        // B = largest integer below c*(k+1); slack = (B+1)*den - num*(k+1)
        // stays in [0, den).
        std::uint64_t B = 0, slack = den - num;
        for (std::uint64_t k = 1; k <= horizon; ++k) {
            s += table.is_prime(k);
            if (slack < num) {
                slack += den - num;
                ++B;  // B just dropped below the moving boundary c*(k+1)
                s -= table.is_prime(B);
            } else {
                slack -= num;
            }
            if (s < levels) last_at[s] = k;
        }
    }
    return last_at;
}

std::vector<std::uint64_t> extract_values(
    const std::vector<std::uint64_t>& last_at, std::uint64_t n_max) {
    // n-th term = 1 + largest k whose count is still below n.
    std::vector<std::uint64_t> values(n_max);
    std::uint64_t below = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        below = std::max(below, last_at[n - 1]);
        values[n - 1] = below + 1;
    }
    return values;
}

}  // namespace

std::uint64_t interval_count(const PrimeTable& table, RationalC c,
                             std::uint64_t k) {
    return table.pi(k) - table.pi(c.floor_mul(k));
}

std::uint64_t strict_infimum_count(const PrimeTable& table, RationalC c,
                                   std::uint64_t k) {
    if (k + 1 > table.limit())
        throw std::out_of_range("strict count at k = " + std::to_string(k) +
                                " needs table limit " + std::to_string(k + 1));
    // #{p < c*(k+1)} = pi(ceil(c*(k+1)) - 1), exact in integer arithmetic.
    std::uint64_t below = c.ceil_mul(k + 1);
    return table.pi(k) - table.pi(below - 1);
}

RamanujanList generate(RationalC c, std::uint64_t n_max, TablePool& pool,
                       SweepSemantics semantics) {
    if (n_max == 0)
        throw std::invalid_argument("n_max must be at least 1");
    // Integer-sweep: a bound for the n_max-th term certifies the whole
    // prefix.  Strict mode: the strict count can sit one below the integer
    // count, so a bound one index higher is used.
    std::uint64_t bound_n =
        semantics == SweepSemantics::integer_sweep ? n_max : n_max + 1;
    std::uint64_t horizon = upper_bound(c, bound_n, pool).x0;
    for (;;) {
        std::uint64_t table_need =
            horizon + (semantics == SweepSemantics::strict_real ? 1 : 0);
        auto table = pool.at_least(table_need);
        auto last_at = sweep_levels(*table, c, n_max, horizon, semantics);
        std::uint64_t top = *std::max_element(last_at.begin(), last_at.end());
        if (top + 1 >= horizon) {
            // A tracked level touched the sweep end; the bound cannot be
            // trusted to have been applied, so re-run wider.
            horizon *= 2;
            continue;
        }
        return RamanujanList{c, extract_values(last_at, n_max), horizon,
                             semantics};
    }
}

RamanujanList generate_through_value(RationalC c, std::uint64_t value_limit,
                                     TablePool& pool) {
    // Expected index count is (1-c) * pi(limit); start a little above and
    // grow until the last term passes the limit.
    double limit_d = static_cast<double>(std::max<std::uint64_t>(value_limit, 8));
    double guess = (1.0 - c.value()) * limit_d / std::log(limit_d) * 1.15 + 16;
    auto n_guess = static_cast<std::uint64_t>(guess);
    for (;;) {
        RamanujanList list = generate(c, n_guess, pool);
        if (list.values.back() >= value_limit) return list;
        n_guess += n_guess / 2 + 8;
    }
}

bool verify_definition(const PrimeTable& table, RationalC c,
                       std::uint64_t candidate, std::uint64_t n,
                       std::uint64_t horizon) {
    if (candidate < 1 || horizon < candidate)
        throw std::invalid_argument(
            "need 1 <= candidate <= horizon, got candidate = " +
            std::to_string(candidate) + ", horizon = " +
            std::to_string(horizon));
    if (n == 0) throw std::invalid_argument("n must be at least 1");
    if (interval_count(table, c, candidate - 1) >= n) return false;
    // Straight from the definition, one direct count per k; deliberately not
    // sharing the incremental sweep machinery.
    for (std::uint64_t k = candidate; k <= horizon; ++k)
        if (table.pi(k) - table.pi(c.floor_mul(k)) < n) return false;
    return true;
}

std::vector<SemanticsDip> semantics_discrepancy_scan(const PrimeTable& table,
                                                     RationalC c,
                                                     std::uint64_t n_max,
                                                     std::uint64_t horizon) {
    if (n_max == 0)
        throw std::invalid_argument("n_max must be at least 1");
    if (horizon + 1 > table.limit())
        throw std::out_of_range("discrepancy scan to " + std::to_string(horizon) +
                                " needs table limit " +
                                std::to_string(horizon + 1));
    auto last_at =
        sweep_levels(table, c, n_max, horizon, SweepSemantics::integer_sweep);
    // Terms the integer sweep has settled by each k: settled(k) = #{n <=
    // n_max : R_n <= k}.  A strict-side dip matters only when it falls below
    // that count.
    std::vector<std::uint64_t> settled_at = extract_values(last_at, n_max);

    std::vector<SemanticsDip> dips;
    const std::uint64_t num = c.numerator(), den = c.denominator();
    std::uint64_t s_int = 0, hi = 0, rem = 0;
    std::uint64_t s_strict = 0, B = 0, slack = den - num;
    std::uint64_t settled = 0;
    for (std::uint64_t k = 1; k <= horizon; ++k) {
        bool kp = table.is_prime(k);
        s_int += kp;
        rem += num;
        if (rem >= den) {
            rem -= den;
            ++hi;
            s_int -= table.is_prime(hi);
        }
        s_strict += kp;
        if (slack < num) {
            slack += den - num;
            ++B;
            s_strict -= table.is_prime(B);
        } else {
            slack -= num;
        }
        while (settled < n_max && settled_at[settled] <= k) ++settled;
        if (s_strict < settled)
            dips.push_back(SemanticsDip{k, s_int, s_strict});
    }
    return dips;
}

}  // namespace ramanujan
