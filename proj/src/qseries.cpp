#include "modfol/qseries.hpp"

#include "modfol/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modfol {

namespace {

// Below this many output coefficients the OpenMP fork costs more than it saves.
constexpr int kParallelMulThreshold = 48;

Rational cauchy_coefficient(const QSeries& a, const QSeries& b, int k)
{
    // Coefficient of q^(a.val + b.val + k).
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    Rational acc;
    const int lo = std::max(0, k - static_cast<int>(bc.size()) + 1);
    const int hi = std::min(k, static_cast<int>(ac.size()) - 1);
    for (int i = lo; i <= hi; ++i) {
        acc += ac[i] * bc[k - i];
    }
    return acc;
}

void product_shape(const QSeries& a, const QSeries& b, int& valuation, int& order)
{
    valuation = a.valuation() + b.valuation();
    order = std::min(a.valuation() + b.order(), b.valuation() + a.order());
}

} // namespace

QSeries::QSeries(int valuation, std::vector<Rational> coeffs, int order)
    : valuation_(valuation), order_(order), coeffs_(std::move(coeffs))
{
    if (order < valuation) {
        throw std::invalid_argument("QSeries: truncation order below valuation");
    }
    coeffs_.resize(static_cast<std::size_t>(order - valuation));
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
}

QSeries QSeries::constant(const Rational& c, int order)
{
    return monomial(0, c, order);
}

QSeries QSeries::monomial(int exponent, const Rational& c, int order)
{
    if (order <= exponent) {
        throw std::invalid_argument("QSeries::monomial: order must exceed the exponent");
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(order - exponent));
    coeffs[0] = c;
    return QSeries(exponent, std::move(coeffs), order);
}

const Rational& QSeries::coeff(int exponent) const
{
    static const Rational zero;
    if (exponent >= order_) {
        throw std::out_of_range("QSeries::coeff: exponent " + std::to_string(exponent) +
                                " is beyond the truncation order " + std::to_string(order_));
    }
    if (exponent < valuation_) {
        return zero;
    }
    return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
}

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

QSeries QSeries::normalized() const
{
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
    if (first == coeffs_.end()) {
        return QSeries(order_, {}, order_);
    }
    const auto skip = static_cast<int>(first - coeffs_.begin());
    return QSeries(valuation_ + skip, std::vector<Rational>(first, coeffs_.end()), order_);
}

QSeries QSeries::truncated(int order) const
{
    if (order > order_) {
        throw std::invalid_argument("QSeries::truncated: cannot raise the truncation order");
    }
    if (order < valuation_) {
        return QSeries(order, {}, order);
    }
    return QSeries(valuation_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (order - valuation_)), order);
}

QSeries QSeries::shifted(int k) const
{
    return QSeries(valuation_ + k, coeffs_, order_ + k);
}

QSeries QSeries::operator-() const
{
    QSeries r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

QSeries& QSeries::operator+=(const QSeries& other)
{
    const int val = std::min(valuation_, other.valuation_);
    const int ord = std::min(order_, other.order_);
    std::vector<Rational> out(static_cast<std::size_t>(ord - val));
    for (int e = val; e < ord; ++e) {
        out[static_cast<std::size_t>(e - val)] = coeff(e) + other.coeff(e);
    }
    *this = QSeries(val, std::move(out), ord);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& other)
{
    return *this += -other;
}

QSeries& QSeries::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

QSeries& QSeries::operator/=(const Rational& c)
{
    if (c == 0) {
        throw std::domain_error("QSeries: division by zero");
    }
    for (auto& x : coeffs_) {
        x /= c;
    }
    return *this;
}

bool operator==(const QSeries& a, const QSeries& b)
{
    return a.order_ == b.order_ && a.agrees_with(b);
}

bool QSeries::agrees_with(const QSeries& other) const
{
    const int lo = std::min(valuation_, other.valuation_);
    const int hi = std::min(order_, other.order_);
    for (int e = lo; e < hi; ++e) {
        if (coeff(e) != other.coeff(e)) {
            return false;
        }
    }
    return true;
}

std::string QSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int e = valuation_; e < order_; ++e) {
        const Rational& c = coeff(e);
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << modfol::to_string(mag);
            continue;
        }
        if (mag != 1) {
            os << modfol::to_string(mag) << ' ';
        }
        os << 'q';
        if (e != 1) {
            os << '^' << e;
        }
    }
    if (first) {
        return "0";
    }
    return os.str();
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    return series_mul(a, b);
}

QSeries series_mul(const QSeries& a, const QSeries& b)
{
    int val = 0;
    int ord = 0;
    product_shape(a, b, val, ord);
    const int n = ord - val;
    if (n < kParallelMulThreshold) {
        return reference::series_mul_serial(a, b);
    }
    std::vector<Rational> out(static_cast<std::size_t>(n));
    // Late coefficients have longer sums; dynamic scheduling balances them.
#pragma omp parallel for schedule(dynamic, 4)
    for (int k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = cauchy_coefficient(a, b, k);
    }
    return QSeries(val, std::move(out), ord);
}

namespace reference {

QSeries series_mul_serial(const QSeries& a, const QSeries& b)
{
    int val = 0;
    int ord = 0;
    product_shape(a, b, val, ord);
    const int n = ord - val;
    std::vector<Rational> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = cauchy_coefficient(a, b, k);
    }
    return QSeries(val, std::move(out), ord);
}

} // namespace reference

QSeries series_theta(const QSeries& a)
{
    std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= a.valuation() + static_cast<int>(i);
    }
    return QSeries(a.valuation(), std::move(out), a.order());
}

QSeries series_inverse(const QSeries& a)
{
    if (a.coeffs().empty() || a.coeffs().front() == 0) {
        throw Error(ErrorKind::LeadingZero, "cannot invert a series whose leading coefficient is zero");
    }
    const auto ac = a.coeffs();
    const int n = static_cast<int>(ac.size());
    const Rational lead_inv = Rational(1) / ac[0];
    std::vector<Rational> out(static_cast<std::size_t>(n));
    out[0] = lead_inv;
    for (int k = 1; k < n; ++k) {
        Rational acc;
        for (int i = 1; i <= k; ++i) {
            acc += ac[i] * out[k - i];
        }
        out[k] = -acc * lead_inv;
    }
    const int v = a.valuation();
    return QSeries(-v, std::move(out), -v + n);
}

QSeries series_pow_inv(const QSeries& a, int e)
{
    if (e < 0) {
        return series_pow_inv(series_inverse(a), -e);
    }
    const int relative = a.order() - a.valuation();
    if (e == 0) {
        return QSeries::constant(1, std::max(relative, 1));
    }
    QSeries result;
    bool have = false;
    QSeries base = a;
    while (e > 0) {
        if (e & 1) {
            result = have ? series_mul(result, base) : base;
            have = true;
        }
        e >>= 1;
        if (e > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

} // namespace modfol
