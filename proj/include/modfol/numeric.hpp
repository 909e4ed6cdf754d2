#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>
#include <limits>

namespace modfol {

// About 34 significant decimal digits, software floating point. Expression
// templates are off so that std::complex<HighReal> behaves like a value type.
using HighReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<34>,
                                               boost::multiprecision::et_off>;

template <class Real>
using Complex = std::complex<Real>;

template <class Real>
Real pi()
{
    return boost::math::constants::pi<Real>();
}

template <class Real>
Complex<Real> two_pi_i()
{
    return Complex<Real>(Real(0), 2 * pi<Real>());
}

template <class Real>
Real epsilon()
{
    return std::numeric_limits<Real>::epsilon();
}

/// e^{2 pi i z}
template <class Real>
Complex<Real> q_of(const Complex<Real>& z)
{
    return std::exp(two_pi_i<Real>() * z);
}

} // namespace modfol

namespace modfol {

/// 2x2 complex matrix (x1 x2; x3 x4), row major.
template <class Real>
struct CMat2 {
    Complex<Real> x1, x2, x3, x4;

    static CMat2 identity() { return {Complex<Real>(1), Complex<Real>(0), Complex<Real>(0), Complex<Real>(1)}; }

    Complex<Real> det() const { return x1 * x4 - x2 * x3; }
    CMat2 transpose() const { return {x1, x3, x2, x4}; }
    CMat2 inverse() const
    {
        const Complex<Real> d = det();
        return {x4 / d, -x2 / d, -x3 / d, x1 / d};
    }
    CMat2 operator*(const CMat2& o) const
    {
        return {x1 * o.x1 + x2 * o.x3, x1 * o.x2 + x2 * o.x4, x3 * o.x1 + x4 * o.x3, x3 * o.x2 + x4 * o.x4};
    }
    CMat2 operator+(const CMat2& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3, x4 + o.x4}; }
    CMat2 operator-(const CMat2& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3, x4 - o.x4}; }
    CMat2 operator*(const Complex<Real>& s) const { return {x1 * s, x2 * s, x3 * s, x4 * s}; }
    /// Largest entry modulus.
    Real max_abs() const
    {
        using std::abs;
        using std::max;
        return max(max(abs(x1), abs(x2)), max(abs(x3), abs(x4)));
    }
    template <class Other>
    CMat2<Other> convert() const
    {
        auto c = [](const Complex<Real>& v) { return Complex<Other>(Other(v.real()), Other(v.imag())); };
        return {c(x1), c(x2), c(x3), c(x4)};
    }
};

} // namespace modfol
