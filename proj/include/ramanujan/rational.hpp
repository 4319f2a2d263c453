#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ramanujan {

// Exact rational ratio c with 0 < c < 1, stored reduced.  All interval
// endpoint computations (floor(c*k), membership tests) are done in integer
// arithmetic so results do not depend on floating-point rounding.
class RationalC {
public:
    // Requires 0 < numerator < denominator; reduces by gcd.
    RationalC(std::uint64_t numerator, std::uint64_t denominator);

    // Accepts "a/b" with integer a, b, or a decimal like "0.45" / ".5".
    // Throws std::invalid_argument on malformed input or a value outside (0,1).
    static RationalC parse(std::string_view text);

    std::uint64_t numerator() const { return num_; }
    std::uint64_t denominator() const { return den_; }

    // floor(c * k), exact via 128-bit intermediate.
    std::uint64_t floor_mul(std::uint64_t k) const {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(num_) * k) / den_);
    }

    // floor(k / c) = floor(k * den / num), exact.
    std::uint64_t floor_div(std::uint64_t k) const {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(den_) * k) / num_);
    }

    // ceil(c * k), exact.
    std::uint64_t ceil_mul(std::uint64_t k) const {
        unsigned __int128 p = static_cast<unsigned __int128>(num_) * k;
        return static_cast<std::uint64_t>((p + den_ - 1) / den_);
    }

    // Whether c * k is an integer.
    bool exact_mul(std::uint64_t k) const {
        return (static_cast<unsigned __int128>(num_) * k) % den_ == 0;
    }

    // The unique integer in the half-open step (c*(k-1), c*k], if any.
    // The step has length c < 1, so the only candidate is floor(c*k), and it
    // lies inside exactly when the floor advanced.  Requires k >= 1.
    std::optional<std::uint64_t> integer_in_step(std::uint64_t k) const {
        std::uint64_t lo = floor_mul(k - 1);
        std::uint64_t hi = floor_mul(k);
        if (hi > lo) return hi;
        return std::nullopt;
    }

    // 1 - c.
    RationalC complement() const { return RationalC(den_ - num_, den_); }

    // Double approximation, for analytic formulas only.
    double value() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // "a/b" in lowest terms.
    std::string str() const;

    friend bool operator==(const RationalC& a, const RationalC& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const RationalC& a, const RationalC& b) {
        return static_cast<unsigned __int128>(a.num_) * b.den_ <
               static_cast<unsigned __int128>(b.num_) * a.den_;
    }

private:
    std::uint64_t num_;
    std::uint64_t den_;
};

}  // namespace ramanujan
