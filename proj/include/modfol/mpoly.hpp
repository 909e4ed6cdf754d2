#pragma once

#include "modfol/rational.hpp"

#include <array>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modfol {

// Exponent vector of a monomial; its length is the number of variables.
using Monomial = std::vector<unsigned>;

// Descending graded-lex: higher total degree first, ties broken by the
// exponent of the earliest variable.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with rational coefficients. Zero coefficients are
/// never stored and iteration follows the graded-lex order above.
class MPoly {
public:
    using Terms = std::map<Monomial, Rational, GradedLexGreater>;

    /// Zero polynomial in t_0..t_3.
    MPoly();
    explicit MPoly(std::vector<std::string> variables);

    static MPoly constant(const Rational& c, std::vector<std::string> variables = default_variables());
    /// The i-th variable as a polynomial.
    static MPoly variable(std::size_t i, std::vector<std::string> variables = default_variables());
    static std::vector<std::string> default_variables();

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int total_degree() const;

    Rational coeff(const Monomial& m) const;
    /// Adds c * m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rational& c);
    MPoly& operator*=(const MPoly& o);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
    friend bool operator==(const MPoly& a, const MPoly& b);

    MPoly pow(unsigned e) const;
    MPoly derivative(std::size_t var) const;

    /// Replaces variable i by images[i] (all images share one variable set).
    MPoly compose(std::span<const MPoly> images) const;

    Rational evaluate(std::span<const Rational> point) const;

    template <class Real>
    std::complex<Real> evaluate(std::span<const std::complex<Real>> point) const;

    /// Compact rendering: "27t_0^2t_3^2-t_0t_2^3", "3/4t_2^3", "-t_1".
    std::string to_compact_string() const;
    /// Spaced rendering: "27 t0^2 t3^2 - t0 t2^3".
    std::string to_string() const;

private:
    void check_compatible(const MPoly& o) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

/// Parses the compact rendering with variables t_0..t_3 (or whatever names are
/// passed). Throws ParseError.
MPoly parse_compact_mpoly(std::string_view text, std::vector<std::string> variables = MPoly::default_variables());

struct PolyMatrix2 {
    std::array<std::array<MPoly, 2>, 2> e;

    MPoly det() const;
    PolyMatrix2 adjugate() const;
    PolyMatrix2 derivative(std::size_t var) const;
    PolyMatrix2 transpose() const;
    MPoly trace() const;

    PolyMatrix2& operator+=(const PolyMatrix2& o);
    PolyMatrix2& operator-=(const PolyMatrix2& o);
    PolyMatrix2& operator*=(const MPoly& s);

    friend PolyMatrix2 operator+(PolyMatrix2 a, const PolyMatrix2& b) { return a += b; }
    friend PolyMatrix2 operator-(PolyMatrix2 a, const PolyMatrix2& b) { return a -= b; }
    friend PolyMatrix2 operator*(PolyMatrix2 a, const MPoly& s) { return a *= s; }
    friend PolyMatrix2 operator*(const MPoly& s, PolyMatrix2 a) { return a *= s; }
    friend PolyMatrix2 operator*(const PolyMatrix2& a, const PolyMatrix2& b);
    friend bool operator==(const PolyMatrix2& a, const PolyMatrix2& b);
};

/// Determinant of a square polynomial matrix by cofactor expansion along the
/// first row (sizes here are at most 4).
MPoly poly_det(const std::vector<std::vector<MPoly>>& m);

template <class Real>
std::complex<Real> MPoly::evaluate(std::span<const std::complex<Real>> point) const
{
    std::complex<Real> acc(0);
    for (const auto& [mono, c] : terms_) {
        std::complex<Real> term(to_real<Real>(c));
        for (std::size_t i = 0; i < mono.size(); ++i) {
            for (unsigned k = 0; k < mono[i]; ++k) {
                term *= point[i];
            }
        }
        acc += term;
    }
    return acc;
}

} // namespace modfol
