#include "doctest.h"

#include "modfol/error.hpp"
#include "modfol/gaussmanin.hpp"
#include "modfol/periods.hpp"

#include <cmath>

using namespace modfol;
using cd = std::complex<double>;

namespace {

std::vector<TPoint> circle(cd center_t3, double radius, int sides, cd t2, cd t1 = 0)
{
    std::vector<TPoint> pts;
    const double pi = std::acos(-1.0);
    for (int k = 0; k <= sides; ++k) {
        const cd t3 = center_t3 + radius * std::exp(cd(0, 2 * pi * k / sides));
        pts.push_back({1.0, t1, t2, t3});
    }
    return pts;
}

} // namespace

TEST_CASE("published entries render byte for byte")
{
    for (BasisTag tag : {BasisTag::Canonical, BasisTag::Classical}) {
        const auto cm = matrices(tag);
        const auto& table = published_entries(tag);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t k = 0; k < 4; ++k) {
                CHECK(cm.a[i].e[k / 2][k % 2].to_compact_string() == table[i][k]);
            }
        }
    }
    const auto cl = matrices(BasisTag::Classical);
    const auto ca = matrices(BasisTag::Canonical);
    CHECK(cl.a[1].e[1][0].to_compact_string() == "27t_0^2t_3^2-t_0t_2^3");
    CHECK(ca.a[1].e[1][0].to_compact_string() == "27t_0^2t_3^2-t_0t_2^3");
    CHECK(ca.a[3].e[0][1].to_compact_string() == "-21t_0^2t_2");
    CHECK(cl.a[3].e[0][0].to_compact_string() == "3t_0^2t_1t_2-9/2t_0^2t_3");
    CHECK(cl.a[0].e[1][0].to_compact_string() == "3/2t_0t_1^2t_2t_3+9t_0t_1t_3^2-1/2t_1t_2^3+1/8t_2^2t_3");
    CHECK(discriminant_poly().to_compact_string() == "27t_0^2t_3^2-t_0t_2^3");
}

TEST_CASE("determinant identities")
{
    const auto checks = verify_det_identities();
    REQUIRE(checks.size() == 3);
    for (const auto& c : checks) {
        CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
    }
}

TEST_CASE("basis change identities")
{
    const auto checks = verify_basis_change();
    REQUIRE(checks.size() == 6);
    for (const auto& c : checks) {
        CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
    }
}

TEST_CASE("connection_eval")
{
    const auto a = connection_eval({1.0, 0.0, 0.0, 1.0}, BasisTag::Classical);
    CHECK(std::abs(a[1].x3 - 1.0) < 1e-15);
    CHECK(std::abs(a[1].x1) == 0.0);
    CHECK_THROWS_AS(connection_eval({1.0, 0.5, 0.0, 0.0}, BasisTag::Classical), Error);
    CHECK_THROWS_AS(connection_eval({1.0, 0.0, 3.0, 1.0}, BasisTag::Canonical), Error);
}

TEST_CASE("transport along a constant path is the identity")
{
    const TPoint t{1.0, 0.2, 1.0, 0.5};
    const PeriodMatrix p0 = period_matrix_general(t);
    const auto r = picard_fuchs_transport(p0, {t, t});
    CHECK((r.end - p0).max_abs() < 1e-14);
}

TEST_CASE("transport around a contractible loop returns to the start")
{
    const TPoint t{1.0, 0.1, 2.0, cd(0.2, 0.1)};
    const PeriodMatrix p0 = period_matrix_general(t);
    auto loop = circle(t[3] + 0.1, 0.1, 48, t[2], t[1]);
    const auto r = picard_fuchs_transport(p0, loop);
    CHECK((r.end - p0).max_abs() < 1e-8);
}

TEST_CASE("transport agrees with the AGM periods")
{
    const TPoint a{1.0, 0.0, 0.0, 1.0};
    const TPoint b{1.0, 0.0, 0.0, 2.0};
    const PeriodMatrix p0 = period_matrix_general(a);
    const auto r = picard_fuchs_transport(p0, {a, b});
    const auto al = align_left_sl2z(r.end, period_matrix_general(b));
    CHECK(al.unimodular);
    CHECK((al.aligned - r.end).max_abs() < 1e-6);
    CHECK(r.min_abs_delta >= 27 - 1e-9);

    // A path in every coordinate, including t0.
    const TPoint c{cd(1.2, 0.1), cd(0.3, -0.2), cd(0.5, 0.5), cd(1.5, -0.3)};
    const auto r2 = picard_fuchs_transport(p0, {a, c});
    const auto al2 = align_left_sl2z(r2.end, period_matrix_general(c));
    CHECK(al2.unimodular);
    CHECK((al2.aligned - r2.end).max_abs() < 1e-6);
}

TEST_CASE("monodromy around the discriminant is in SL(2,Z)")
{
    // Delta = 27 t3^2 - 27 vanishes at t3 = 1 when t2 = 3.
    const auto loop = circle(1.0, 0.5, 64, 3.0);
    const PeriodMatrix p0 = period_matrix_general(loop.front());
    const auto r = picard_fuchs_transport(p0, loop);
    const PeriodMatrix m = r.end * p0.inverse();
    for (cd v : {m.x1, m.x2, m.x3, m.x4}) {
        CHECK(std::abs(v - std::round(v.real())) < 1e-6);
    }
    CHECK(std::abs(m.det() - 1.0) < 1e-6);
    // Around a single node the monodromy is unipotent (trace 2) and nontrivial.
    CHECK(std::abs(m.x1 + m.x4 - 2.0) < 1e-6);
    CHECK((m - PeriodMatrix::identity()).max_abs() > 0.5);
}

TEST_CASE("transport refuses paths through the discriminant")
{
    const TPoint a{1.0, 0.0, 3.0, 0.5};
    const TPoint b{1.0, 0.0, 3.0, 1.5};
    CHECK_THROWS_AS(picard_fuchs_transport(period_matrix_general(a), {a, b}), Error);
}

TEST_CASE("waypoint parsing")
{
    const auto w = parse_waypoints_json("[[1,0,0,1],[1,[0.5,0.25],0,2]]");
    REQUIRE(w.size() == 2);
    CHECK(w[1][1] == cd(0.5, 0.25));
    CHECK_THROWS_AS(parse_waypoints_json("[[1,0,0]]"), ParseError);
    CHECK_THROWS_AS(parse_waypoints_json("[[1,0,0,"), ParseError);
}
