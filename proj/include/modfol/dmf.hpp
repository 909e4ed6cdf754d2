#pragma once

#include "modfol/eisenstein.hpp"
#include "modfol/qseries.hpp"
#include "modfol/rational.hpp"

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modfol {

// Exponents (a, b, c) of g1^a g2^b g3^c.
using GExponent = std::array<unsigned, 3>;

inline int weight_of(const GExponent& e)
{
    return static_cast<int>(2 * e[0] + 4 * e[1] + 6 * e[2]);
}

// Higher weight first, then lexicographically descending exponents, so
// "g1^2 - 1/12 g2" and "4 g1 g2 - 6 g3" come out in their usual order.
struct GExponentOrder {
    bool operator()(const GExponent& x, const GExponent& y) const
    {
        const int wx = weight_of(x), wy = weight_of(y);
        return wx != wy ? wx > wy : x > y;
    }
};

/// Polynomial in the generators g1, g2, g3 with rational coefficients.
class DmfElement {
public:
    using Terms = std::map<GExponent, Rational, GExponentOrder>;

    DmfElement() = default;
    static DmfElement constant(const Rational& c);
    static DmfElement g(int index); // 1, 2 or 3
    static DmfElement monomial(const GExponent& e, const Rational& c = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add_term(const GExponent& e, const Rational& c);
    Rational coeff(const GExponent& e) const;

    /// (weight m, depth n). The zero element reports (0, 0). Throws
    /// Error(Inhomogeneous) when the terms have different weights.
    std::pair<int, int> grade() const;
    /// Exact g1-degree; 0 for the zero element.
    int depth() const;

    DmfElement operator-() const;
    DmfElement& operator+=(const DmfElement& o);
    DmfElement& operator-=(const DmfElement& o);
    DmfElement& operator*=(const Rational& c);
    DmfElement& operator*=(const DmfElement& o);
    friend DmfElement operator+(DmfElement a, const DmfElement& b) { return a += b; }
    friend DmfElement operator-(DmfElement a, const DmfElement& b) { return a -= b; }
    friend DmfElement operator*(DmfElement a, const DmfElement& b) { return a *= b; }
    friend DmfElement operator*(DmfElement a, const Rational& c) { return a *= c; }
    friend DmfElement operator*(const Rational& c, DmfElement a) { return a *= c; }
    friend bool operator==(const DmfElement& a, const DmfElement& b) { return a.terms_ == b.terms_; }

    DmfElement pow(unsigned e) const;
    /// Partial derivative with respect to g_index.
    DmfElement partial(int index) const;

    /// "g1^2 - 1/12 g2", "9 g2", "0".
    std::string to_string() const;
    /// {"terms": [{"exponents": [a,b,c], "coeff": "p/q"}, ...]}
    std::string to_json() const;

    /// Value at explicit generator values (g1, g2, g3).
    template <class Real>
    Complex<Real> evaluate_at(const std::array<Complex<Real>, 3>& gvals) const;

    /// Value at z using the Lambert-series generators g_k = a_k E_{2k}(z).
    template <class Real>
    Complex<Real> evaluate(const Complex<Real>& z, double floor = kImaginaryFloor) const;

private:
    Terms terms_;
};

/// D = d/dz on C[g1,g2,g3] via the Ramanujan relations.
DmfElement diff_op(const DmfElement& f);

/// Rational q-series s with f(z) = u^{m/2} s(q), u = 2 pi i / 12; known for
/// exponents < order. Requires f homogeneous.
QSeries to_qseries(const DmfElement& f, int order);

/// [f_0, ..., f_n] with f_i = (1 / (i! C(n,i))) d^i f / d g1^i; n defaults to
/// the exact depth.
std::vector<DmfElement> associated_functions(const DmfElement& f, std::optional<int> depth = std::nullopt);

/// Real 2x2 matrix (a b; c d).
struct Matrix2R {
    double a = 1, b = 0, c = 0, d = 1;

    double det() const { return a * d - b * c; }
    bool is_integral() const;
    std::complex<double> act(const std::complex<double>& z) const { return (a * z + b) / (c * z + d); }
    std::complex<double> j(const std::complex<double>& z) const { return c * z + d; }
    Matrix2R operator*(const Matrix2R& o) const
    {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

/// f ||_m A (z) evaluated from truncated q-expansions of the generators
/// (known below `order`). Throws Error(LowImaginaryPart) when Im z or Im Az is
/// below `floor`; std::invalid_argument when det A <= 0.
std::complex<double> slash_eval(const DmfElement& f, const Matrix2R& a, std::complex<double> z, int order = 64,
                                double floor = kImaginaryFloor, std::optional<int> depth = std::nullopt);

/// Generator values (g1, g2, g3)(z) from q-expansions truncated below `order`.
std::array<std::complex<double>, 3> generators_from_series(std::complex<double> z, int order);

/// Monomials g1^a g2^b g3^c with 2a + 4b + 6c = m and a <= n, in rendering
/// order. Throws Error(OddWeight) for odd m.
std::vector<GExponent> basis_and_dimension(int n, int m);

/// T_p applied to a q-series of an element of M^n_m. The result is known for
/// exponents < ceil(order / p).
QSeries hecke_series(const QSeries& s, unsigned p, int m, int n);

/// Unique element of M^n_m with q-expansion s (in the to_qseries frame),
/// solved exactly on every available coefficient. Throws Error(Singular)
/// if the monomials are dependent on the data and Error(ReconstructionFailed)
/// if surplus coefficients disagree; std::invalid_argument if s carries fewer
/// than dim + surplus coefficients.
DmfElement reconstruct(const QSeries& s, int n, int m, int surplus = 8);

/// Hecke operator on M^n_m (n = exact depth unless overridden). Uses at least
/// dim + 8 q-coefficients, so the series order is raised as needed.
DmfElement hecke(const DmfElement& f, unsigned p, int order = 64, std::optional<int> depth = std::nullopt);

enum class CompositionExponent {
    Stated,  // d^{m-n-1}
    Derived, // d^{m-2n-1}
};

struct CompositionReport {
    bool pass = false;
    QSeries lhs;
    QSeries rhs;
    int compared_order = 0;
    std::string detail;
};

/// Compares T_p T_q f with sum_{d | (p,q)} d^e T_{pq/d^2} f on q-expansions.
CompositionReport hecke_composition_check(unsigned p, unsigned q, const DmfElement& f, int order = 200,
                                          CompositionExponent convention = CompositionExponent::Stated,
                                          std::optional<int> depth = std::nullopt);

/// Parses the expression grammar: rationals, g1, g2, g3, + - * ^, parentheses
/// and juxtaposition. Throws ParseError with the offending position.
DmfElement parse_dmf(std::string_view text);

template <class Real>
Complex<Real> DmfElement::evaluate_at(const std::array<Complex<Real>, 3>& gvals) const
{
    Complex<Real> acc(0);
    for (const auto& [e, c] : terms_) {
        Complex<Real> term(to_real<Real>(c));
        for (int i = 0; i < 3; ++i) {
            for (unsigned k = 0; k < e[i]; ++k) {
                term *= gvals[i];
            }
        }
        acc += term;
    }
    return acc;
}

template <class Real>
Complex<Real> DmfElement::evaluate(const Complex<Real>& z, double floor) const
{
    const auto e = eisenstein_triple(z, floor);
    const auto a = g_constants_t<Real>();
    return evaluate_at<Real>({a[0] * e[0], a[1] * e[1], a[2] * e[2]});
}

} // namespace modfol
