#include "ramanujan/rational.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ramanujan {

namespace {

std::uint64_t parse_u64(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("invalid ") + what + ": '" +
                                    std::string(s) + "'");
    return v;
}

}  // namespace

RationalC::RationalC(std::uint64_t numerator, std::uint64_t denominator)
    : num_(numerator), den_(denominator) {
    if (den_ == 0) throw std::invalid_argument("ratio denominator is zero");
    if (num_ == 0 || num_ >= den_)
        throw std::invalid_argument("ratio " + std::to_string(num_) + "/" +
                                    std::to_string(den_) +
                                    " is outside (0,1)");
    std::uint64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

RationalC RationalC::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty ratio");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::uint64_t n = parse_u64(text.substr(0, slash), "ratio numerator");
        std::uint64_t d = parse_u64(text.substr(slash + 1), "ratio denominator");
        if (d == 0) throw std::invalid_argument("ratio denominator is zero");
        return RationalC(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        // A bare integer can only be 0 or 1 here, both outside (0,1);
        // run it through the constructor for the uniform error message.
        return RationalC(parse_u64(text, "ratio"), 1);
    }
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18)
        throw std::invalid_argument("unsupported decimal ratio: '" +
                                    std::string(text) + "'");
    std::uint64_t w = whole.empty() ? 0 : parse_u64(whole, "ratio");
    std::uint64_t f = parse_u64(frac, "ratio");
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    // w + f/den as a single fraction; the constructor range-checks.
    if (w > 1) throw std::invalid_argument("ratio must be in (0,1)");
    return RationalC(w * den + f, den);
}

std::string RationalC::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace ramanujan
