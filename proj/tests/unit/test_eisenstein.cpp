#include "doctest.h"

#include "../support/oracles.hpp"
#include "modfol/eisenstein.hpp"

#include <cmath>

using namespace modfol;

TEST_CASE("sigma examples")
{
    CHECK(sigma(1, 1) == 1);
    CHECK(sigma(1, 6) == 12);
    CHECK(sigma(3, 2) == 9);
    for (unsigned long n = 1; n < 300; ++n) {
        CHECK(sigma(5, n) == oracle::sigma_brute(5, n));
    }
}

TEST_CASE("eisenstein_series first coefficients")
{
    CHECK(eisenstein_series(1, 5).series.coeff(1) == -24);
    CHECK(eisenstein_series(2, 5).series.coeff(1) == 240);
    CHECK(eisenstein_series(3, 5).series.coeff(1) == -504);
    CHECK(eisenstein_series(1, 3).series.to_string() == "1 - 24 q - 72 q^2");
}

TEST_CASE("eisenstein coefficients are integers and parallel table matches serial")
{
    for (int k = 1; k <= 3; ++k) {
        const auto e = eisenstein_series(k, 201);
        CHECK(e.series == reference::eisenstein_series_serial(k, 201).series);
        CHECK(e.series.coeff(0) == 1);
        for (int n = 1; n <= 200; ++n) {
            CHECK(e.series.coeff(n).get_den() == 1);
            CHECK(e.series.coeff(n) == Rational(eisenstein_factor(k) * oracle::sigma_brute(2 * k - 1, n)));
        }
    }
}

TEST_CASE("discriminant_series")
{
    const QSeries d = discriminant_series(201);
    CHECK(d.coeff(0) == 0);
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(2) == -24);
    CHECK(d.coeff(3) == 252);
    const auto eta = oracle::eta24(201);
    for (int n = 0; n <= 200; ++n) {
        CHECK(d.coeff(n) == Rational(eta[n]));
    }
    CHECK_THROWS(discriminant_series(3));
}

TEST_CASE("j_series")
{
    const QSeries j = j_series(30);
    CHECK(j.valuation() == -1);
    CHECK(j.order() == 30);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);
    CHECK(j.coeff(2) == 21493760);
    const QSeries e4 = eisenstein_series(2, 29).series;
    CHECK((j * discriminant_series(31)).truncated(29) == (e4 * e4 * e4).truncated(29));
}

TEST_CASE("Ramanujan identities in the normalized frame to order 200")
{
    const int n = 201;
    const QSeries e2 = eisenstein_series(1, n).series;
    const QSeries e4 = eisenstein_series(2, n).series;
    const QSeries e6 = eisenstein_series(3, n).series;
    CHECK(Rational(12) * series_theta(e2) == e2 * e2 - e4);
    CHECK(Rational(3) * series_theta(e4) == e2 * e4 - e6);
    CHECK(Rational(2) * series_theta(e6) == e2 * e6 - e4 * e4);
}

TEST_CASE("frame constants")
{
    CHECK(frame_value(0).value == std::complex<double>(1));
    CHECK_THROWS_AS(frame_value(3), Error);
    const auto g = g_constants();
    CHECK(std::abs(g[1] / (g[0] * g[0]) - 12.0) < 1e-14);
    CHECK(std::abs(g[2] / (g[0] * g[0] * g[0]) - 8.0) < 1e-14);
    CHECK(std::abs(g[0] - std::complex<double>(0, 0.5235987755982988)) < 1e-15);
    CHECK(std::abs(frame_value(4).value - g[0] * g[0]) < 1e-15);
}

TEST_CASE("numeric evaluation agrees with the exact series")
{
    const std::complex<double> z(0.1, 0.8);
    const auto q = q_of(z);
    for (int k = 1; k <= 3; ++k) {
        const auto exact = eisenstein_series(k, 80).series.evaluate(q);
        CHECK(std::abs(eisenstein_eval(k, z) - exact) < 1e-10);
    }
    // E6(i) = 0.
    CHECK(std::abs(eisenstein_eval(3, std::complex<double>(0, 1))) < 1e-12);
    CHECK_THROWS_AS(eisenstein_eval(1, std::complex<double>(0, 0.2)), Error);

    const std::complex<HighReal> zh(HighReal(0), HighReal(1));
    CHECK(abs(eisenstein_eval(3, zh)) < HighReal("1e-30"));
}
