#pragma once

#include <cstdint>
#include <utility>

#include "ramanujan/prime_table.hpp"
#include "ramanujan/rational.hpp"

namespace ramanujan {

// A certified upper bound x0 for the n-th c-Ramanujan prime, together with
// the analytic quantities that justify it.
struct BoundCertificate {
    enum class Method { analytic_f, p3n_fallback };

    RationalC c;
    std::uint64_t n = 0;
    std::uint64_t x0 = 0;  // R_{c,n} <= x0
    Method method = Method::analytic_f;
    double A = 0;    // 3/2 - ln c; meaningful for the analytic method
    double u_c = 0;  // greatest real root of the monotonicity cubic
    double M_c = 0;  // where the lower bound f becomes valid and increasing
};

// 3/2 - ln c; always > 3/2 for c in (0,1).
double constant_A(RationalC c);

// Lower bound f(x) = x/(ln x - 1/2) - c*x/(ln x - A) for the number of
// primes in (cx, x].  Valid only for x >= max(67, e^{3/2}/c); throws
// std::invalid_argument naming that threshold below it.
double f_lower(RationalC c, double x);

// Greatest real root of the cubic
//   (u - 1)(u - (A - 1/2))^2 - c (u - (A + 1/2)) u^2
// whose positivity makes f increasing.  Roots are isolated between the
// critical points of the expanded cubic and pinned by bisection.
double cubic_u_c(RationalC c);

// max(67, e^{3/2}/c, e^{u_c + 1/2}); f is valid and nondecreasing from here on.
double validity_threshold_M(RationalC c);

// Certified bound for the n-th term: solves f(x) = n by bisection above
// M_c, or uses the 3n-th prime when c <= 1/2 and n >= 2, whichever is
// smaller.  The pool supplies the prime table for the fallback.
BoundCertificate upper_bound(RationalC c, std::uint64_t n, TablePool& pool);

// (m ln m + m lnln m - m, m ln m + m lnln m + m); contains the m-th prime
// for every m >= 6.  Throws std::invalid_argument for m < 6.
std::pair<double, double> rosser_window(std::uint64_t m);

}  // namespace ramanujan
