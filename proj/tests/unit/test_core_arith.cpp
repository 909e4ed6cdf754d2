#include "doctest.h"

#include "modfol/error.hpp"
#include "modfol/linsolve.hpp"
#include "modfol/mpoly.hpp"
#include "modfol/qseries.hpp"

#include <random>

using namespace modfol;

namespace {

QSeries poly_series(std::vector<Rational> c, int order, int valuation = 0)
{
    return QSeries(valuation, std::move(c), order);
}

QSeries random_series(std::mt19937& rng, int order, bool invertible)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> c(static_cast<std::size_t>(order));
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    if (invertible && c[0] == 0) {
        c[0] = 1;
    }
    return QSeries(0, c, order);
}

MPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<unsigned> ex(0, 2);
    MPoly p;
    for (int k = 0; k < 4; ++k) {
        p.add_term({ex(rng), ex(rng), ex(rng), ex(rng)}, Rational(num(rng), 1 + k));
    }
    return p;
}

} // namespace

TEST_CASE("rational parsing and rendering")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2x"), ParseError);
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("series_mul examples")
{
    const QSeries f = poly_series({1, 3, -2, 5}, 4);
    CHECK(series_mul(QSeries::constant(1, 4), f) == f);

    // Convolution oracle: (1 - 24q)(1 + 240q) = 1 + 216q - 5760q^2.
    const QSeries p = series_mul(poly_series({1, -24, 0}, 3), poly_series({1, 240, 0}, 3));
    CHECK(p.order() == 3);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 216);
    CHECK(p.coeff(2) == -5760);

    const QSeries prod = series_mul(QSeries::monomial(-1, 1, 5), QSeries::monomial(1, 1, 7));
    CHECK(prod.normalized().valuation() == 0);
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.order() == 6);
}

TEST_CASE("truncation bookkeeping")
{
    const QSeries a(1, {1, 2, 3}, 4);
    const QSeries b(0, {1, 1}, 2);
    CHECK(series_mul(a, b).order() == std::min(1 + 2, 0 + 4));
    CHECK_THROWS_AS((void)a.coeff(4), std::out_of_range);
    CHECK((a + b).order() == 2);
}

TEST_CASE("series_theta examples")
{
    CHECK(series_theta(QSeries::constant(1, 5)).is_zero());
    const QSeries t = series_theta(QSeries(1, {1, -24}, 3));
    CHECK(t.coeff(1) == 1);
    CHECK(t.coeff(2) == -48);
    CHECK(series_theta(QSeries::monomial(-1, 1, 3)).coeff(-1) == -1);
}

TEST_CASE("series_pow_inv examples")
{
    const int n = 20;
    const QSeries inv = series_pow_inv(poly_series({1, -1}, n), -1);
    for (int k = 0; k < n; ++k) {
        CHECK(inv.coeff(k) == 1);
    }
    CHECK(series_pow_inv(poly_series({2, 7}, 6), 0) == QSeries::constant(1, 6));
    const QSeries qinv = series_pow_inv(QSeries::monomial(1, 1, 8), -1);
    CHECK(qinv.valuation() == -1);
    CHECK(qinv.coeff(-1) == 1);
    CHECK(qinv.order() == 6);
    CHECK_THROWS_AS(series_pow_inv(poly_series({0, 1}, 4), -1), Error);
    CHECK(series_pow_inv(poly_series({1, 1}, 5), 3) == poly_series({1, 3, 3, 1, 0}, 5));
}

TEST_CASE("series inverse property over random series")
{
    std::mt19937 rng(20260101);
    for (int trial = 0; trial < 50; ++trial) {
        const QSeries a = random_series(rng, 25, true);
        const QSeries one = series_mul(series_pow_inv(a, -1), a);
        CHECK(one == QSeries::constant(1, 25));
    }
}

TEST_CASE("series ring axioms and parallel product matches serial")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const QSeries a = random_series(rng, 70, false);
        const QSeries b = random_series(rng, 70, false);
        const QSeries c = random_series(rng, 70, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(series_mul(a, b) == reference::series_mul_serial(a, b));
    }
}

TEST_CASE("series rendering")
{
    CHECK(QSeries(0, {1, -24, -72}, 3).to_string() == "1 - 24 q - 72 q^2");
    CHECK(QSeries(-1, {1, 744, 196884}, 2).to_string() == "q^-1 + 744 + 196884 q");
    CHECK(QSeries(0, {0, 1}, 2).to_string() == "q");
    CHECK(QSeries(0, {Rational(1, 2)}, 1).to_string() == "1/2");
}

TEST_CASE("mpoly examples")
{
    const MPoly t0 = MPoly::variable(0), t1 = MPoly::variable(1), t2 = MPoly::variable(2), t3 = MPoly::variable(3);
    PolyMatrix2 m{{{{t0, MPoly()}, {MPoly(), t1}}}};
    CHECK(m.det() == t0 * t1);

    const MPoly delta_inner = Rational(27) * t0 * t3.pow(2) - t2.pow(3);
    CHECK(delta_inner.derivative(2) == Rational(-3) * t2.pow(2));

    const std::vector<Rational> pt{1, 0, 0, 1};
    CHECK(delta_inner.evaluate(pt) == 27);
    CHECK(delta_inner.to_compact_string() == "27t_0t_3^2-t_2^3");
    CHECK(delta_inner.to_string() == "27 t0 t3^2 - t2^3");
}

TEST_CASE("mpoly compact parse round trip")
{
    for (const char* s : {"21/2t_0t_1t_2t_3-9t_0t_3^2+3/4t_2^3", "-21t_0^2t_2", "27t_0^2t_3^2-t_0t_2^3",
                          "-63/2t_0^2t_1^2t_3+1/2t_0t_1t_2^2+15/8t_0t_2t_3", "0", "5"}) {
        CHECK(parse_compact_mpoly(s).to_compact_string() == s);
    }
    CHECK_THROWS_AS(parse_compact_mpoly("3x"), ParseError);
}

TEST_CASE("mpoly ring axioms and compose")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MPoly());
    }
    const MPoly t1 = MPoly::variable(1), t2 = MPoly::variable(2);
    const std::vector<MPoly> images{MPoly::constant(1), t2, t1, MPoly::variable(3)};
    CHECK((t1 * t2.pow(2)).compose(images) == t2 * t1.pow(2));
}

TEST_CASE("poly_det")
{
    const MPoly t0 = MPoly::variable(0), t1 = MPoly::variable(1);
    const MPoly one = MPoly::constant(1), zero;
    std::vector<std::vector<MPoly>> m{{t0, one, zero}, {zero, t1, one}, {one, zero, t0}};
    // t0*(t1*t0) - 1*(0 - 1) = t0^2 t1 + 1
    CHECK(poly_det(m) == t0.pow(2) * t1 + one);
}

TEST_CASE("solve_linear_exact examples")
{
    RationalMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<Rational> b{Rational(1, 3), -2, 5};
    CHECK(solve_linear_exact(id, b) == b);

    auto x = solve_linear_exact({{2, 0}, {0, 4}}, {1, 1});
    CHECK(x[0] == Rational(1, 2));
    CHECK(x[1] == Rational(1, 4));

    // Known solution (3/2, -1) with a duplicated row.
    RationalMatrix over{{1, 2}, {Rational(1, 2), 3}, {1, 2}};
    std::vector<Rational> rhs{Rational(3, 2) - 2, Rational(3, 4) - 3, Rational(3, 2) - 2};
    x = solve_linear_exact(over, rhs);
    CHECK(x[0] == Rational(3, 2));
    CHECK(x[1] == -1);

    rhs[2] += 1;
    CHECK_THROWS_AS(solve_linear_exact(over, rhs), Error);
    try {
        solve_linear_exact({{1, 2}, {2, 4}}, {1, 2});
        FAIL("expected Singular");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Singular);
    }
}

TEST_CASE("solve_linear_exact back-substitution property")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-20, 20);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 5;
        RationalMatrix a(n + 3, std::vector<Rational>(n));
        for (auto& row : a) {
            for (auto& v : row) {
                v = Rational(num(rng), 1 + (trial % 4));
            }
        }
        std::vector<Rational> truth(n);
        for (auto& v : truth) {
            v = Rational(num(rng), 7);
            v.canonicalize();
        }
        std::vector<Rational> b(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                b[i] += a[i][j] * truth[j];
            }
        }
        try {
            const auto x = solve_linear_exact(a, b);
            for (std::size_t i = 0; i < a.size(); ++i) {
                Rational lhs;
                for (std::size_t j = 0; j < n; ++j) {
                    lhs += a[i][j] * x[j];
                }
                CHECK(lhs == b[i]);
            }
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Singular);
        }
    }
}
