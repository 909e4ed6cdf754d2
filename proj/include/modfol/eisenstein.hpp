#pragma once

#include "modfol/error.hpp"
#include "modfol/numeric.hpp"
#include "modfol/qseries.hpp"

#include <array>
#include <complex>
#include <vector>

namespace modfol {

/// sigma_e(n) = sum of d^e over the divisors d of n (n >= 1).
Integer sigma(unsigned e, unsigned long n);

/// E_{2k} with constant term 1 and integer coefficients, k in {1,2,3}.
struct NormalizedEisenstein {
    int k = 0;
    QSeries series;
};

/// Known for exponents < order (order >= 1).
NormalizedEisenstein eisenstein_series(int k, int order);

/// Coefficient multiplying sigma_{2k-1}(n): -24, 240, -504.
Integer eisenstein_factor(int k);

/// (E4^3 - E6^2)/1728 = q - 24 q^2 + ..., known for exponents < order (order >= 4).
QSeries discriminant_series(int order);

/// E4^3 / Delta_norm = q^-1 + 744 + 196884 q + ..., known for exponents < order.
QSeries j_series(int order);

/// u = 2 pi i / 12 and powers of it: g_k = a_k E_{2k} with
/// (a_1, a_2, a_3) = (u, 12 u^2, 8 u^3).
struct FrameConstant {
    int half_weight = 0;
    std::complex<double> value;
};

/// u^(m/2); throws Error(OddWeight) for odd m.
FrameConstant frame_value(int m);
std::array<std::complex<double>, 3> g_constants();

template <class Real>
Complex<Real> frame_unit()
{
    return two_pi_i<Real>() / Real(12);
}

template <class Real>
std::array<Complex<Real>, 3> g_constants_t()
{
    const auto u = frame_unit<Real>();
    return {u, Real(12) * u * u, Real(8) * u * u * u};
}

/// Smallest Im z accepted by numeric q-expansion evaluators.
inline constexpr double kImaginaryFloor = 0.25;

/// E_{2k}(z) by the Lambert series 1 + c_k sum n^{2k-1} q^n / (1 - q^n).
/// Throws Error(LowImaginaryPart) below `floor`.
template <class Real>
Complex<Real> eisenstein_eval(int k, const Complex<Real>& z, double floor = kImaginaryFloor);

/// All three E_{2k}(z) sharing one q.
template <class Real>
std::array<Complex<Real>, 3> eisenstein_triple(const Complex<Real>& z, double floor = kImaginaryFloor);

namespace reference {

NormalizedEisenstein eisenstein_series_serial(int k, int order);

} // namespace reference

template <class Real>
std::array<Complex<Real>, 3> eisenstein_triple(const Complex<Real>& z, double floor)
{
    using std::abs;
    if (z.imag() < Real(floor)) {
        throw Error(ErrorKind::LowImaginaryPart, "Im z below the evaluation floor");
    }
    const Complex<Real> q = q_of(z);
    const Real eps = epsilon<Real>() / Real(1024);
    std::array<Complex<Real>, 3> sums{};
    Complex<Real> qn = q;
    for (int n = 1; n < 100000; ++n) {
        const Complex<Real> lambert = qn / (Complex<Real>(1) - qn);
        const Real nr(n);
        const Real n3 = nr * nr * nr;
        const Real n5 = n3 * nr * nr;
        sums[0] += nr * lambert;
        sums[1] += n3 * lambert;
        sums[2] += n5 * lambert;
        if (abs(n5 * lambert) < eps && n > 2) {
            break;
        }
        qn *= q;
    }
    return {Complex<Real>(1) + Real(-24) * sums[0], Complex<Real>(1) + Real(240) * sums[1],
            Complex<Real>(1) + Real(-504) * sums[2]};
}

template <class Real>
Complex<Real> eisenstein_eval(int k, const Complex<Real>& z, double floor)
{
    if (k < 1 || k > 3) {
        throw std::invalid_argument("eisenstein_eval: k must be 1, 2 or 3");
    }
    return eisenstein_triple(z, floor)[static_cast<std::size_t>(k - 1)];
}

} // namespace modfol
