#include "modfol/eisenstein.hpp"

#include <stdexcept>

namespace modfol {

Integer sigma(unsigned e, unsigned long n)
{
    if (n == 0) {
        throw std::invalid_argument("sigma: n must be positive");
    }
    Integer acc = 0;
    Integer power;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        mpz_ui_pow_ui(power.get_mpz_t(), d, e);
        acc += power;
        const unsigned long other = n / d;
        if (other != d) {
            mpz_ui_pow_ui(power.get_mpz_t(), other, e);
            acc += power;
        }
    }
    return acc;
}

Integer eisenstein_factor(int k)
{
    // (-1)^k 4k / B_k with B_1 = 1/6, B_2 = 1/30, B_3 = 1/42.
    switch (k) {
    case 1: return -24;
    case 2: return 240;
    case 3: return -504;
    default: throw std::invalid_argument("eisenstein_factor: k must be 1, 2 or 3");
    }
}

namespace {

void check_args(int k, int order)
{
    if (k < 1 || k > 3) {
        throw std::invalid_argument("eisenstein_series: k must be 1, 2 or 3");
    }
    if (order < 1) {
        throw std::invalid_argument("eisenstein_series: order must be at least 1");
    }
}

} // namespace

NormalizedEisenstein eisenstein_series(int k, int order)
{
    check_args(k, order);
    const Integer factor = eisenstein_factor(k);
    const unsigned e = static_cast<unsigned>(2 * k - 1);
    std::vector<Rational> c(static_cast<std::size_t>(order));
    c[0] = 1;
#pragma omp parallel for schedule(dynamic, 16)
    for (int n = 1; n < order; ++n) {
        c[static_cast<std::size_t>(n)] = Rational(factor * sigma(e, static_cast<unsigned long>(n)));
    }
    return {k, QSeries(0, std::move(c), order)};
}

namespace reference {

NormalizedEisenstein eisenstein_series_serial(int k, int order)
{
    check_args(k, order);
    const Integer factor = eisenstein_factor(k);
    const unsigned e = static_cast<unsigned>(2 * k - 1);
    std::vector<Rational> c(static_cast<std::size_t>(order));
    c[0] = 1;
    for (int n = 1; n < order; ++n) {
        c[static_cast<std::size_t>(n)] = Rational(factor * sigma(e, static_cast<unsigned long>(n)));
    }
    return {k, QSeries(0, std::move(c), order)};
}

} // namespace reference

QSeries discriminant_series(int order)
{
    if (order < 4) {
        throw std::invalid_argument("discriminant_series: order must be at least 4");
    }
    const QSeries e4 = eisenstein_series(2, order).series;
    const QSeries e6 = eisenstein_series(3, order).series;
    return ((e4 * e4 * e4 - e6 * e6) / Rational(1728)).normalized();
}

QSeries j_series(int order)
{
    if (order < 2) {
        throw std::invalid_argument("j_series: order must be at least 2");
    }
    // Delta_norm = q * (1 + ...), so its inverse loses one order relative to
    // its input; two extra terms leave j known exactly below `order`.
    const int work = order + 2;
    const QSeries e4 = eisenstein_series(2, work).series;
    const QSeries delta = discriminant_series(work);
    const QSeries j = series_mul(e4 * e4 * e4, series_inverse(delta));
    return j.truncated(order);
}

FrameConstant frame_value(int m)
{
    if (m % 2 != 0) {
        throw Error(ErrorKind::OddWeight, "frame constants exist only for even weight, got " + std::to_string(m));
    }
    const int h = m / 2;
    const std::complex<double> u = frame_unit<double>();
    std::complex<double> v(1);
    for (int i = 0; i < std::abs(h); ++i) {
        v *= u;
    }
    if (h < 0) {
        v = 1.0 / v;
    }
    return {h, v};
}

std::array<std::complex<double>, 3> g_constants()
{
    return g_constants_t<double>();
}

} // namespace modfol
