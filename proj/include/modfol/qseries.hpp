#pragma once

#include "modfol/rational.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace modfol {

/// Truncated Laurent series in q with exact rational coefficients.
///
/// The series stores every coefficient for exponents in [valuation, order);
/// coefficients at or above `order` are unknown. All arithmetic records the
/// order up to which its result is certified, so no operation silently loses
/// precision. The valuation is nominal: the leading stored coefficient may be
/// zero until normalized() is called.
class QSeries {
public:
    /// The zero series known to order 0.
    QSeries() = default;

    /// Coefficient i of `coeffs` belongs to q^(valuation + i); the series is
    /// known for exponents < valuation + coeffs.size() unless `order` is
    /// larger, in which case the missing coefficients are zero.
    QSeries(int valuation, std::vector<Rational> coeffs, int order);

    static QSeries constant(const Rational& c, int order);
    /// c * q^exponent, known to `order`.
    static QSeries monomial(int exponent, const Rational& c, int order);

    int valuation() const noexcept { return valuation_; }
    int order() const noexcept { return order_; }

    /// Coefficient of q^exponent; zero below the valuation. Throws
    /// std::out_of_range for exponents at or beyond the truncation order.
    const Rational& coeff(int exponent) const;
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    /// Strips leading zero coefficients (keeps the order).
    QSeries normalized() const;
    /// Same series with a lower truncation order.
    QSeries truncated(int order) const;
    /// Multiplication by q^k.
    QSeries shifted(int k) const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& other);
    QSeries& operator-=(const QSeries& other);
    QSeries& operator*=(const Rational& c);
    QSeries& operator/=(const Rational& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
    friend QSeries operator/(QSeries a, const Rational& c) { return a /= c; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    /// Equal coefficients on the common known range and equal orders.
    friend bool operator==(const QSeries& a, const QSeries& b);

    /// True when both series agree on every exponent below min(order).
    bool agrees_with(const QSeries& other) const;

    /// Numeric value at q using all stored coefficients.
    template <class Real>
    std::complex<Real> evaluate(const std::complex<Real>& q) const;

    /// "1 - 24 q - 72 q^2"; exponents >= the truncation order are not shown.
    std::string to_string() const;

private:
    int valuation_ = 0;
    int order_ = 0;
    std::vector<Rational> coeffs_;
};

/// Cauchy product. Output coefficients are independent sums, computed in
/// parallel with OpenMP when the result is large enough.
QSeries series_mul(const QSeries& a, const QSeries& b);

/// theta = q d/dq: coefficient of q^n is multiplied by n.
QSeries series_theta(const QSeries& a);

/// a^e for any integer e; e < 0 requires a nonzero leading coefficient
/// (ErrorKind::LeadingZero otherwise). For a = q^v u, the result is known to
/// relative precision order - v, i.e. absolute order e*v + (order - v).
QSeries series_pow_inv(const QSeries& a, int e);

QSeries series_inverse(const QSeries& a);

namespace reference {

/// Single-threaded Cauchy product; kept as the oracle for series_mul.
QSeries series_mul_serial(const QSeries& a, const QSeries& b);

} // namespace reference

template <class Real>
std::complex<Real> QSeries::evaluate(const std::complex<Real>& q) const
{
    // Horner on the stored block, then the valuation factor.
    std::complex<Real> acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + std::complex<Real>(to_real<Real>(*it));
    }
    if (valuation_ != 0) {
        std::complex<Real> scale(1);
        const std::complex<Real> base = valuation_ > 0 ? q : std::complex<Real>(1) / q;
        for (int i = 0; i < std::abs(valuation_); ++i) {
            scale *= base;
        }
        acc *= scale;
    }
    return acc;
}

} // namespace modfol
