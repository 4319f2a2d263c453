#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramanujan {

struct SieveOptions {
    // Odd-number flags processed per sieve pass; cache-size knob with no
    // effect on results.
    std::uint64_t segment_flags = std::uint64_t{1} << 18;
    // Refuse to build tables whose resident size exceeds this.
    std::uint64_t memory_cap_bytes = std::uint64_t{1} << 30;
    // Refuse to sieve past this value (0 means only the built-in maximum).
    std::uint64_t max_limit = 0;
};

// Compressed prime table over [2, limit]: one bit per odd number plus a
// per-word cumulative popcount, giving O(1) prime counting and O(log) nth
// prime without storing the primes themselves (~0.1 byte per sieved number).
class PrimeTable {
public:
    static PrimeTable build(std::uint64_t limit, const SieveOptions& opts = {});

    std::uint64_t limit() const { return limit_; }

    // Number of primes <= k.  Throws std::out_of_range for k > limit; counts
    // are never extrapolated.
    std::uint64_t pi(std::uint64_t k) const {
        if (k > limit_) throw_past_limit("pi", k);
        if (k < 2) return 0;
        std::uint64_t j = (k - 1) / 2;  // index of the largest odd <= k
        std::uint64_t w = j >> 6, b = j & 63;
        std::uint64_t mask = (b == 63) ? ~std::uint64_t{0}
                                       : ((std::uint64_t{1} << (b + 1)) - 1);
        return 1 + rank_[w] +
               static_cast<std::uint64_t>(std::popcount(bits_[w] & mask));
    }

    bool is_prime(std::uint64_t k) const {
        if (k > limit_) throw_past_limit("is_prime", k);
        if (k == 2) return true;
        if (k < 2 || k % 2 == 0) return false;
        std::uint64_t j = k >> 1;
        return (bits_[j >> 6] >> (j & 63)) & 1;
    }

    // The floor(m)-th prime, 1-based.  Throws std::out_of_range when floor(m)
    // is zero or exceeds the number of primes in the table.
    std::uint64_t nth_prime(double m) const;

    std::uint64_t prime_count() const { return total_; }
    std::uint64_t memory_bytes() const;

    // Resident size of a table with the given limit, for cap checks.
    static std::uint64_t estimate_bytes(std::uint64_t limit);

private:
    PrimeTable() = default;

    [[noreturn]] void throw_past_limit(const char* op, std::uint64_t k) const {
        throw std::out_of_range(std::string(op) + "(" + std::to_string(k) +
                                ") beyond table limit " +
                                std::to_string(limit_));
    }

    std::uint64_t limit_ = 0;
    std::uint64_t total_ = 0;              // pi(limit)
    std::vector<std::uint64_t> bits_;      // bit j of word w <-> odd 2*(64w+j)+1
    std::vector<std::uint32_t> rank_;      // odd primes strictly before word w
};

// Process-wide cache handing out one shared immutable table, regrown
// geometrically as larger limits are requested.  Thread-safe.
class TablePool {
public:
    explicit TablePool(SieveOptions opts = {}) : opts_(opts) {}

    // A table with limit >= the request, building one if needed.
    std::shared_ptr<const PrimeTable> at_least(std::uint64_t limit);

    const SieveOptions& options() const { return opts_; }

private:
    std::mutex mu_;
    SieveOptions opts_;
    std::shared_ptr<const PrimeTable> table_;
};

}  // namespace ramanujan
