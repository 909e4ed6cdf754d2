#include "doctest.h"

#include "modfol/error.hpp"
#include "modfol/foliation.hpp"

#include <cmath>
#include <random>

using namespace modfol;
using cd = std::complex<double>;

namespace {

TVec gpoint(cd z)
{
    const CurvePoint g = eisenstein_point(z);
    return {g.t1, g.t2, g.t3};
}

double dist(const TVec& a, const TVec& b)
{
    return std::sqrt(std::norm(a[0] - b[0]) + std::norm(a[1] - b[1]) + std::norm(a[2] - b[2]));
}

double size(const TVec& a)
{
    return dist(a, TVec{0.0, 0.0, 0.0});
}

} // namespace

TEST_CASE("vector field values")
{
    const TVec r = ra_eval({0.0, 1.0, 0.0});
    CHECK(std::abs(r[0] - cd(-1.0 / 12)) < 1e-15);
    CHECK(std::abs(r[1]) == 0.0);
    CHECK(std::abs(r[2] - cd(-1.0 / 3)) < 1e-15);
    // Vanishes on the singular curve (a, 12 a^2, 8 a^3).
    for (cd a : {cd(0.3, 0.1), cd(-1.2, 0.4), cd(2, 0)}) {
        CHECK(size(ra_eval({a, 12.0 * a * a, 8.0 * a * a * a})) < 1e-12);
    }
}

TEST_CASE("exact polynomial identities")
{
    for (const auto& c : verify_eta_annihilation()) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
    const auto cocycle = verify_discriminant_cocycle();
    INFO(cocycle.detail);
    CHECK(cocycle.pass);
    const auto alt = alt_field_check();
    INFO(alt.detail);
    CHECK(alt.pass);
}

TEST_CASE("forms annihilate Ra numerically")
{
    std::mt19937 rng(7);
    std::normal_distribution<double> n;
    for (int k = 0; k < 50; ++k) {
        const TVec t{cd(n(rng), n(rng)), cd(n(rng), n(rng)), cd(n(rng), n(rng))};
        const TVec r = ra_eval(t);
        for (const TVec& e : eta_eval(t)) {
            CHECK(std::abs(e[0] * r[0] + e[1] * r[1] + e[2] * r[2]) < 1e-12 * (1 + std::pow(size(t), 4)));
        }
    }
}

TEST_CASE("flow from an Eisenstein point follows z + s")
{
    const cd z0(0, 2);
    const TVec start = gpoint(z0);
    const auto full = flow(start, 1.0);
    CHECK(dist(full.samples.back().t, start) < 1e-7 * size(start));
    CHECK(full.samples.back().s == doctest::Approx(1.0));

    for (int k = 1; k <= 10; ++k) {
        const double s = 0.1 * k - 0.03;
        const auto tr = flow(start, s, {.monitors = false});
        const TVec expect = gpoint(z0 + s);
        INFO("s = " << s);
        CHECK(dist(tr.samples.back().t, expect) < 1e-6 * size(expect));
    }
}

TEST_CASE("discriminant obeys d log Delta = 12 t1 ds")
{
    // c2 chosen so that c4 z0 - c2 = 1 and the leaf starts near g(z0).
    const cd z0(0.1, 1.1), c4(1.0, 0.3);
    const TVec start = leaf_uniformization(z0, c4 * z0 - 1.0, c4);
    const auto tr = flow(start, 0.5);
    CHECK(tr.samples.size() > 5);
    const cd d0 = tr.samples.front().delta;
    for (const auto& fs : tr.samples) {
        const double lhs = std::log(std::abs(fs.delta)) - std::log(std::abs(d0));
        CHECK(std::abs(lhs - fs.log_delta_predicted.real()) < 1e-6);
        CHECK(std::abs(fs.delta / d0 - std::exp(fs.log_delta_predicted)) < 1e-6 * std::abs(fs.delta / d0));
    }
}

TEST_CASE("the line (t1, 0, 0) is a leaf")
{
    FlowOptions opt;
    opt.discriminant_floor = 0;
    const auto tr = flow({cd(0.4, 0.3), 0.0, 0.0}, 1.0, opt);
    for (const auto& fs : tr.samples) {
        CHECK(std::abs(fs.t[1]) == 0.0);
        CHECK(std::abs(fs.t[2]) == 0.0);
        // t1' = t1^2 solves to t1 / (1 - s t1).
        const cd t1 = cd(0.4, 0.3) / (1.0 - fs.s * cd(0.4, 0.3));
        CHECK(std::abs(fs.t[0] - t1) < 1e-8);
    }
    CHECK_THROWS_AS(flow({cd(0.4, 0.3), 0.0, 0.0}, 1.0), Error);
}

TEST_CASE("guards")
{
    try {
        flow({0.5, 3.0, 1.0}, 1.0);
        FAIL("expected SingularApproach");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularApproach);
    }
    try {
        flow({0.2, 3.0, 1.0}, 1.0); // 27 - 27 = 0
        FAIL("expected DiscriminantApproach");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DiscriminantApproach);
    }
    CHECK_THROWS_AS(leaf_uniformization(cd(0, 1), 0.0, 0.0), Error);
    CHECK_THROWS_AS(leaf_uniformization(cd(0, 1), cd(0, 2), 2.0), Error);
    CHECK_THROWS_AS(g0_action({1.0, 1.0, 1.0}, 0.0, 1.0), Error);
}

TEST_CASE("leaves are uniformized by u(z, c2, c4)")
{
    const auto rep = tangency_check(cd(0, 2), 1.0, 1.0);
    CHECK(rep.pass);
    CHECK(std::abs(rep.lambda - rep.expected) < 1e-6 * std::abs(rep.expected));
    const auto gen = tangency_check(cd(0.3, 1.4), cd(0.7, -0.4), cd(-0.2, 1.1));
    CHECK(gen.pass);
    CHECK(std::abs(gen.lambda - gen.expected) < 1e-6 * std::abs(gen.expected));
}

TEST_CASE("B2 is constant along a leaf")
{
    const cd z0(0.1, 1.3), c4(0.9, -0.3);
    const cd c2 = c4 * z0 - cd(1.1, 0.1);
    const TVec start = leaf_uniformization(z0, c2, c4);
    const auto tr = flow(start, 0.5);
    CHECK(tr.samples.size() > 5);
    const double b2_0 = tr.samples.front().b2;
    CHECK(std::abs(b2_0 - std::imag(c2 * std::conj(c4))) < 1e-8);
    for (const auto& fs : tr.samples) {
        CHECK(std::abs(fs.b2 - b2_0) < 1e-6);
    }
}

TEST_CASE("B2 = 0 leaves have |B3| = 1")
{
    const double rs[] = {0.5, -1.25, 2.0, 0.0, 3.7};
    const cd c4s[] = {cd(1, 0), cd(0.3, 0.8), cd(-1.1, 0.2), cd(0.6, -0.6), cd(2, 1)};
    const cd zs[] = {cd(0.1, 1.2), cd(-0.3, 0.9), cd(0.45, 1.5), cd(0, 2), cd(0.2, 1.05)};
    for (int k = 0; k < 5; ++k) {
        const cd c4 = c4s[k], c2 = rs[k] * c4s[k];
        const Monitors m = invariant_monitors(leaf_uniformization(zs[k], c2, c4));
        INFO("k = " << k);
        CHECK(std::abs(m.b2) < 1e-8);
        CHECK(std::abs(m.b3_abs - 1) < 1e-8);
    }
    // r = 1/2 is rational, so x2/x4 is too.
    const Monitors m = invariant_monitors(leaf_uniformization(cd(0.1, 1.2), 0.5, 1.0));
    CHECK(m.near_k);
    const Monitors g = invariant_monitors(leaf_uniformization(cd(0.1, 1.2), cd(0.5, 0.3), 1.0));
    CHECK_FALSE(g.near_k);
}

TEST_CASE("distance to the singular curve")
{
    const cd c2 = 1.3;
    const cd a = cd(0.4, -0.7);
    // Points (c^2 a1, c^4 a2, c^6 a3) on the orbit of a singular point are singular.
    const TVec p = g0_action({a, 12.0 * a * a, 8.0 * a * a * a}, 1.0 / c2, 0.0);
    CHECK(distance_to_singular_locus(p) < 1e-10);
    CHECK(distance_to_singular_locus({1.0, 0.0, 0.0}) > 0.05);
    // (0, 0, eps) is within eps of the origin.
    CHECK(distance_to_singular_locus({0.0, 0.0, 1e-3}) <= 1e-3 + 1e-15);
}

TEST_CASE("group action")
{
    const TVec t{cd(0.3, 0.2), cd(1.5, -0.4), cd(0.7, 0.1)};
    const cd k1(1.2, 0.3), kp1(0.4, -0.1), k2(0.8, -0.5), kp2(-0.3, 0.6);
    // (k1 kp1; 0 1/k1)(k2 kp2; 0 1/k2)
    const cd k = k1 * k2, kp = k1 * kp2 + kp1 / k2;
    const TVec lhs = g0_action(g0_action(t, k1, kp1), k2, kp2);
    const TVec rhs = g0_action(t, k, kp);
    CHECK(dist(lhs, rhs) < 1e-13);
    // Ra transforms by the factor k^-2 under t -> t . (k 0; 0 1/k), so the
    // action maps leaves to leaves.
    const TVec r = ra_eval(g0_action(t, k1, 0.0));
    const TVec r0 = ra_eval(t);
    CHECK(std::abs(r[0] - r0[0] * std::pow(k1, -4.0)) < 1e-12);
}

TEST_CASE("alternate chart along Eisenstein points")
{
    // alpha(g(z)) solves the alternate field with derivative d/dz.
    const cd z(0.15, 1.1);
    const double h = 1e-4;
    const TVec a = alt_chart(gpoint(z + 2 * h)), b = alt_chart(gpoint(z + h)), c = alt_chart(gpoint(z - h)),
               d = alt_chart(gpoint(z - 2 * h));
    const TVec f = alt_field(alt_chart(gpoint(z)));
    for (std::size_t i = 0; i < 3; ++i) {
        const cd der = (-a[i] + 8.0 * b[i] - 8.0 * c[i] + d[i]) / (12 * h);
        CHECK(std::abs(der - f[i]) < 1e-7 * (1 + std::abs(f[i])));
    }
}

TEST_CASE("best rational")
{
    CHECK(best_rational(0.5, 100) == std::pair<long, long>{1, 2});
    CHECK(best_rational(-1.25, 100) == std::pair<long, long>{-5, 4});
    const auto [p, q] = best_rational(M_PI, 1000);
    CHECK(p == 355);
    CHECK(q == 113);
}
