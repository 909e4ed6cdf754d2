#pragma once

// Independent reference computations used to derive frozen expectations.
// Nothing here goes through the library's series arithmetic.

#include <gmpxx.h>

#include <vector>

namespace oracle {

// Coefficients of q * prod_{n>=1} (1 - q^n)^24 for exponents 0..order-1,
// built by multiplying in one linear factor at a time on plain integers.
inline std::vector<mpz_class> eta24(int order)
{
    std::vector<mpz_class> p(static_cast<std::size_t>(order), 0);
    if (order <= 1) {
        return p;
    }
    std::vector<mpz_class> f(static_cast<std::size_t>(order - 1), 0);
    f[0] = 1;
    for (int n = 1; n < order - 1; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int e = order - 2; e >= n; --e) {
                f[e] -= f[e - n];
            }
        }
    }
    for (int e = 1; e < order; ++e) {
        p[e] = f[e - 1];
    }
    return p;
}

// Divisor power sum by scanning every candidate divisor.
inline mpz_class sigma_brute(unsigned e, unsigned long n)
{
    mpz_class acc = 0, pw;
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            mpz_ui_pow_ui(pw.get_mpz_t(), d, e);
            acc += pw;
        }
    }
    return acc;
}

} // namespace oracle

#include <array>
#include <complex>
#include <cmath>

namespace oracle {

using cd = std::complex<double>;

// Roots of 4x^3 - t2 x - t3 by Durand-Kerner iteration.
inline std::array<cd, 3> cubic_roots(cd t2, cd t3)
{
    std::array<cd, 3> r{cd(0.4, 0.9), cd(0.4, 0.9) * cd(0.4, 0.9), cd(0.4, 0.9) * cd(0.4, 0.9) * cd(0.4, 0.9)};
    auto f = [&](cd x) { return x * x * x - t2 / 4.0 * x - t3 / 4.0; };
    for (int it = 0; it < 500; ++it) {
        for (int i = 0; i < 3; ++i) {
            cd den = 1;
            for (int j = 0; j < 3; ++j) {
                if (j != i) {
                    den *= r[i] - r[j];
                }
            }
            r[i] -= f(r[i]) / den;
        }
    }
    return r;
}

// (oint dx/y, oint x dx/y) over an ellipse enclosing roots ea, eb (x already
// shifted so that the curve is y^2 = 4 (x-e1)(x-e2)(x-e3)), with y continued
// along the contour. Trapezoid rule; the integrand is periodic and analytic.
inline std::array<cd, 2> loop_integrals(const std::array<cd, 3>& e, int ia, int ib, int samples = 20000)
{
    const int ic = 3 - ia - ib;
    const cd center = (e[ia] + e[ib]) / 2.0;
    const cd axis = (e[ib] - e[ia]) / 2.0;
    const double half = std::abs(axis);
    const cd dir = axis / half;
    // Stay clear of the third root: distance from it to the segment.
    const cd rel = (e[ic] - center) / dir;
    const double gap = std::abs(rel.real()) <= half ? std::abs(rel.imag()) : std::abs(rel - cd(rel.real() > 0 ? half : -half));
    const double minor = std::min(0.4 * gap, 0.5 * half);
    const double major = half + minor;
    const double pi = std::acos(-1.0);
    cd prev_y = 0;
    std::array<cd, 2> acc{0, 0};
    for (int k = 0; k < samples; ++k) {
        const double th = 2 * pi * k / samples;
        const cd x = center + dir * cd(major * std::cos(th), minor * std::sin(th));
        const cd dx = dir * cd(-major * std::sin(th), minor * std::cos(th)) * (2 * pi / samples);
        cd y = 2.0 * std::sqrt((x - e[0]) * (x - e[1]) * (x - e[2]));
        if (k > 0 && std::abs(y - prev_y) > std::abs(y + prev_y)) {
            y = -y;
        }
        prev_y = y;
        acc[0] += dx / y;
        acc[1] += x * dx / y;
    }
    return acc;
}

} // namespace oracle
