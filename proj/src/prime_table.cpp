#include "ramanujan/prime_table.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ramanujan/errors.hpp"

namespace ramanujan {

namespace {

// rank_ entries are 32-bit; π(6e10) ≈ 2.4e9 still fits, and anything near
// that size is far past what the default memory cap admits anyway.
constexpr std::uint64_t MAX_LIMIT = 60'000'000'000ull;

std::uint64_t word_count(std::uint64_t limit) {
    std::uint64_t odd_flags = (limit + 1) / 2;  // odd numbers in [1, limit]
    return (odd_flags + 63) / 64;
}

}  // namespace

std::uint64_t PrimeTable::estimate_bytes(std::uint64_t limit) {
    std::uint64_t words = word_count(limit);
    return words * sizeof(std::uint64_t) + (words + 1) * sizeof(std::uint32_t);
}

PrimeTable PrimeTable::build(std::uint64_t limit, const SieveOptions& opts) {
    if (limit < 2)
        throw std::invalid_argument("prime table limit must be at least 2, got " +
                                    std::to_string(limit));
    std::uint64_t hard_max = MAX_LIMIT;
    if (opts.max_limit != 0) hard_max = std::min(hard_max, opts.max_limit);
    if (limit > hard_max)
        throw resource_limit_error("prime table limit " + std::to_string(limit) +
                                   " exceeds the configured maximum " +
                                   std::to_string(hard_max));
    if (std::uint64_t need = estimate_bytes(limit); need > opts.memory_cap_bytes)
        throw resource_limit_error(
            "prime table for limit " + std::to_string(limit) + " needs " +
            std::to_string(need) + " bytes, above the memory cap of " +
            std::to_string(opts.memory_cap_bytes) + " bytes");

    PrimeTable t;
    t.limit_ = limit;
    std::uint64_t words = word_count(limit);
    t.bits_.assign(words, ~std::uint64_t{0});
    t.bits_[0] &= ~std::uint64_t{1};  // 1 is not prime

    // Base primes up to sqrt(limit) by a plain odd-only sieve.
    auto sqrt_limit =
        static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
    while (sqrt_limit * sqrt_limit > limit) --sqrt_limit;
    while ((sqrt_limit + 1) * (sqrt_limit + 1) <= limit) ++sqrt_limit;

    std::vector<std::uint8_t> small_composite((sqrt_limit + 1) / 2, 0);
    std::vector<std::uint64_t> base_primes;
    std::vector<std::uint64_t> next_multiple;  // rolling state across segments
    for (std::uint64_t p = 3; p <= sqrt_limit; p += 2) {
        if (small_composite[p / 2]) continue;
        for (std::uint64_t q = p * p; q <= sqrt_limit; q += 2 * p)
            small_composite[q / 2] = 1;
        base_primes.push_back(p);
        next_multiple.push_back(p * p);  // odd, first composite to strike
    }

    // Strike composites in windows of segment_flags odd numbers.  The windows
    // only order the work; they all write into the same final bit array.
    std::uint64_t seg_flags = std::max<std::uint64_t>(opts.segment_flags, 64);
    std::uint64_t total_flags = (limit + 1) / 2;
    for (std::uint64_t seg_lo = 0; seg_lo < total_flags; seg_lo += seg_flags) {
        std::uint64_t seg_hi = std::min(seg_lo + seg_flags, total_flags);
        std::uint64_t hi_value = 2 * seg_hi - 1;  // largest odd in window
        for (std::size_t i = 0; i < base_primes.size(); ++i) {
            std::uint64_t p = base_primes[i];
            std::uint64_t m = next_multiple[i];
            for (; m <= hi_value; m += 2 * p) {
                std::uint64_t j = m >> 1;  // odd index of m
                t.bits_[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
            }
            next_multiple[i] = m;
        }
    }

    // Clear flag positions past the limit so word popcounts are exact.
    if (std::uint64_t tail = total_flags % 64; tail != 0)
        t.bits_.back() &= (~std::uint64_t{0}) >> (64 - tail);

    t.rank_.resize(words + 1);
    std::uint64_t acc = 0;
    for (std::uint64_t w = 0; w < words; ++w) {
        t.rank_[w] = static_cast<std::uint32_t>(acc);
        acc += std::popcount(t.bits_[w]);
    }
    t.rank_[words] = static_cast<std::uint32_t>(acc);
    t.total_ = acc + 1;  // the even prime 2
    return t;
}

std::uint64_t PrimeTable::nth_prime(double m) const {
    if (!(m >= 1))
        throw std::out_of_range("nth_prime index must be at least 1");
    auto idx = static_cast<std::uint64_t>(std::floor(m));
    if (idx > total_)
        throw std::out_of_range("nth_prime(" + std::to_string(idx) +
                                ") beyond the " + std::to_string(total_) +
                                " primes in the table");
    if (idx == 1) return 2;
    std::uint64_t r = idx - 1;  // 1-based rank among odd primes
    // First word whose preceding-rank reaches r, then select within it.
    std::uint64_t lo = 0, hi = rank_.size() - 1;
    while (lo + 1 < hi) {
        std::uint64_t mid = (lo + hi) / 2;
        (rank_[mid] < r ? lo : hi) = mid;
    }
    std::uint64_t need = r - rank_[lo];
    std::uint64_t x = bits_[lo];
    while (need > 1) {
        x &= x - 1;
        --need;
    }
    std::uint64_t j = 64 * lo + static_cast<std::uint64_t>(std::countr_zero(x));
    return 2 * j + 1;
}

std::uint64_t PrimeTable::memory_bytes() const {
    return bits_.size() * sizeof(std::uint64_t) +
           rank_.size() * sizeof(std::uint32_t);
}

std::shared_ptr<const PrimeTable> TablePool::at_least(std::uint64_t limit) {
    std::scoped_lock lock(mu_);
    if (table_ && table_->limit() >= limit) return table_;
    std::uint64_t target = limit;
    if (table_) {
        // Grow geometrically so creeping requests do not trigger a rebuild
        // each time, but fall back to the exact request if doubling would
        // blow the cap.
        std::uint64_t doubled = std::max(limit, table_->limit() * 2);
        if (PrimeTable::estimate_bytes(doubled) <= opts_.memory_cap_bytes)
            target = doubled;
    }
    table_ = std::make_shared<const PrimeTable>(
        PrimeTable::build(std::max<std::uint64_t>(target, 2), opts_));
    return table_;
}

}  // namespace ramanujan
