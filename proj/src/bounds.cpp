#include "ramanujan/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramanujan/errors.hpp"

namespace ramanujan {

namespace {

// Ceiling for the doubling search in upper_bound; reaching it means the
// requested n is far outside anything this tool is meant to sweep.
constexpr double X_HI_CEILING = 1e18;

double validity_floor(RationalC c) {
    return std::max(67.0, std::exp(1.5) / c.value());
}

// Expanded form of (u-1)(u-a)^2 - c(u-b)u^2 with a = A-1/2, b = A+1/2:
// (1-c)u^3 + (cb - 2a - 1)u^2 + (a^2 + 2a)u - a^2.
struct Cubic {
    double c3, c2, c1, c0;
    double operator()(double u) const {
        return ((c3 * u + c2) * u + c1) * u + c0;
    }
};

Cubic monotonicity_cubic(RationalC c) {
    double A = constant_A(c);
    double a = A - 0.5, b = A + 0.5;
    return Cubic{1.0 - c.value(), c.value() * b - 2.0 * a - 1.0, a * a + 2.0 * a,
                 -a * a};
}

// Bisect a sign change of P on [lo, hi] to 1e-12 relative width.
double bisect_root(const Cubic& P, double lo, double hi) {
    double flo = P(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-12 * std::max(1.0, std::abs(hi));
         ++i) {
        double mid = 0.5 * (lo + hi);
        double fmid = P(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0) == (flo < 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double constant_A(RationalC c) { return 1.5 - std::log(c.value()); }

double f_lower(RationalC c, double x) {
    double floor_x = validity_floor(c);
    if (!(x >= floor_x))
        throw std::invalid_argument(
            "f is only valid for x >= max(67, e^{3/2}/c) = " +
            std::to_string(floor_x) + ", got x = " + std::to_string(x));
    double lx = std::log(x);
    return x / (lx - 0.5) - c.value() * x / (lx - constant_A(c));
}

double cubic_u_c(RationalC c) {
    Cubic P = monotonicity_cubic(c);
    // Monic coefficients and a Cauchy bound enclosing every real root.
    double p2 = P.c2 / P.c3, p1 = P.c1 / P.c3, p0 = P.c0 / P.c3;
    double B = 1.0 + std::max({std::abs(p2), std::abs(p1), std::abs(p0)});

    // Split [-B, B] at the critical points; P is monotone on each piece, so
    // every real root is a sign change of one piece (or a critical value 0).
    std::vector<double> cuts{-B};
    double disc = p2 * p2 - 3.0 * p1;
    if (disc > 0) {
        double s = std::sqrt(disc);
        for (double crit : {(-p2 - s) / 3.0, (-p2 + s) / 3.0})
            if (crit > -B && crit < B) cuts.push_back(crit);
    }
    cuts.push_back(B);

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double lo = cuts[i], hi = cuts[i + 1];
        double flo = P(lo), fhi = P(hi);
        if (flo == 0.0) roots.push_back(lo);
        if ((flo < 0) != (fhi < 0)) roots.push_back(bisect_root(P, lo, hi));
    }
    if (P(cuts.back()) == 0.0) roots.push_back(cuts.back());
    // A real cubic always has at least one real root inside the Cauchy bound.
    return *std::max_element(roots.begin(), roots.end());
}

double validity_threshold_M(RationalC c) {
    return std::max(validity_floor(c), std::exp(cubic_u_c(c) + 0.5));
}

BoundCertificate upper_bound(RationalC c, std::uint64_t n, TablePool& pool) {
    if (n == 0) throw std::invalid_argument("bound index n must be at least 1");
    BoundCertificate cert{c,
                          n,
                          0,
                          BoundCertificate::Method::analytic_f,
                          constant_A(c),
                          cubic_u_c(c),
                          validity_threshold_M(c)};

    auto target = static_cast<double>(n);
    if (f_lower(c, cert.M_c) >= target) {
        // The crossing is at or below M_c, where f is already >= n.
        cert.x0 = static_cast<std::uint64_t>(std::ceil(cert.M_c));
    } else {
        double lo = cert.M_c, hi = cert.M_c;
        while (f_lower(c, hi) < target) {
            hi *= 2.0;
            if (hi > X_HI_CEILING)
                throw resource_limit_error(
                    "upper bound search for n = " + std::to_string(n) +
                    " exceeded the ceiling of 1e18");
        }
        // f is nondecreasing here, so bisection brackets stay valid;
        // keep the endpoint with f >= n and round it up for soundness.
        while (hi - lo > 1e-6 * hi) {
            double mid = 0.5 * (lo + hi);
            (f_lower(c, mid) < target ? lo : hi) = mid;
        }
        cert.x0 = static_cast<std::uint64_t>(std::ceil(hi * (1.0 + 1e-9)));
    }

    // For c <= 1/2 the 3n-th prime is also a bound (n >= 2); use it when it
    // beats the analytic one.
    if (2 * c.numerator() <= c.denominator() && n >= 2) {
        auto [wlo, whi] = rosser_window(3 * n);
        auto table =
            pool.at_least(static_cast<std::uint64_t>(std::ceil(whi)) + 1);
        std::uint64_t p3n = table->nth_prime(static_cast<double>(3 * n));
        if (p3n < cert.x0) {
            cert.method = BoundCertificate::Method::p3n_fallback;
            cert.x0 = p3n;
        }
    }
    return cert;
}

std::pair<double, double> rosser_window(std::uint64_t m) {
    if (m < 6)
        throw std::invalid_argument("the prime location window requires m >= 6, got " +
                                    std::to_string(m));
    auto md = static_cast<double>(m);
    double mid = md * std::log(md) + md * std::log(std::log(md));
    return {mid - md, mid + md};
}

}  // namespace ramanujan
