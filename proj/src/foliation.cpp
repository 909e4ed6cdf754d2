#include "modfol/foliation.hpp"

#include "modfol/error.hpp"

#include <cmath>
#include <limits>

namespace modfol {

namespace {

using cd = std::complex<double>;

MPoly var(std::size_t i)
{
    return MPoly::variable(i);
}

MPoly cst(const Rational& c)
{
    return MPoly::constant(c);
}

double norm3(const TVec& v)
{
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

} // namespace

TVec ra_eval(const TVec& t)
{
    const auto& [t1, t2, t3] = t;
    return {t1 * t1 - t2 / 12.0, 4.0 * t1 * t2 - 6.0 * t3, 6.0 * t1 * t3 - t2 * t2 / 3.0};
}

std::array<TVec, 3> eta_eval(const TVec& t)
{
    const TVec r = ra_eval(t);
    // eta_1 = Ra1 dt2 - Ra2 dt1, eta_2 = Ra2 dt3 - Ra3 dt2, eta_3 = Ra1 dt3 - Ra3 dt1.
    return {TVec{-r[1], r[0], 0.0}, TVec{0.0, -r[2], r[1]}, TVec{-r[2], 0.0, r[0]}};
}

cd discriminant(const TVec& t)
{
    return 27.0 * t[2] * t[2] - t[1] * t[1] * t[1];
}

std::array<MPoly, 3> ra_poly()
{
    const MPoly t1 = var(1), t2 = var(2), t3 = var(3);
    return {t1 * t1 - cst(Rational(1, 12)) * t2, cst(4) * t1 * t2 - cst(6) * t3,
            cst(6) * t1 * t3 - cst(Rational(1, 3)) * t2 * t2};
}

std::array<std::array<MPoly, 3>, 3> eta_poly()
{
    const auto r = ra_poly();
    const MPoly zero;
    return {{{-r[1], r[0], zero}, {zero, -r[2], r[1]}, {-r[2], zero, r[0]}}};
}

std::vector<IdentityCheck> verify_eta_annihilation()
{
    const auto r = ra_poly();
    const auto eta = eta_poly();
    std::vector<IdentityCheck> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const MPoly contraction = eta[i][0] * r[0] + eta[i][1] * r[1] + eta[i][2] * r[2];
        out.push_back({"eta_" + std::to_string(i + 1) + "(Ra) = 0", contraction.is_zero(),
                       contraction.is_zero() ? "" : contraction.to_string()});
    }
    return out;
}

IdentityCheck verify_discriminant_cocycle()
{
    const MPoly t1 = var(1), t2 = var(2), t3 = var(3);
    const MPoly delta = cst(27) * t3 * t3 - t2.pow(3);
    const auto r = ra_poly();
    const MPoly lhs = delta.derivative(1) * r[0] + delta.derivative(2) * r[1] + delta.derivative(3) * r[2];
    const MPoly rhs = cst(12) * t1 * delta;
    return {"dDelta(Ra) = 12 t1 Delta", lhs == rhs, lhs == rhs ? "" : (lhs - rhs).to_string()};
}

IdentityCheck alt_field_check()
{
    const MPoly t1 = var(1), t2 = var(2), t3 = var(3);
    const std::array<MPoly, 3> alpha{cst(12) * t1, cst(-12) * t1 * t1 + t2,
                                     cst(4) * t1.pow(3) - t2 * t1 + t3};
    const auto r = ra_poly();
    // Ra_alt in the same variable slots: (-s2, -6 s3, s1 s3 - s2^2 / 4).
    const std::array<MPoly, 3> ra_alt{-t2, cst(-6) * t3, t1 * t3 - cst(Rational(1, 4)) * t2 * t2};
    const std::vector<MPoly> images{var(0), alpha[0], alpha[1], alpha[2]};
    IdentityCheck c{"Jac(alpha) Ra = Ra_alt(alpha)", true, {}};
    for (std::size_t i = 0; i < 3; ++i) {
        const MPoly push = alpha[i].derivative(1) * r[0] + alpha[i].derivative(2) * r[1] +
                           alpha[i].derivative(3) * r[2];
        const MPoly target = ra_alt[i].compose(images);
        if (push != target) {
            c.pass = false;
            c.detail += "component " + std::to_string(i + 1) + ": " + (push - target).to_string() + "; ";
        }
    }
    return c;
}

TVec alt_chart(const TVec& t)
{
    const auto& [t1, t2, t3] = t;
    return {12.0 * t1, -12.0 * t1 * t1 + t2, 4.0 * t1 * t1 * t1 - t2 * t1 + t3};
}

TVec alt_field(const TVec& s)
{
    return {-s[1], -6.0 * s[2], s[0] * s[2] - s[1] * s[1] / 4.0};
}

TVec g0_action(const TVec& t, cd k, cd kp)
{
    const CurvePoint r = g0_act(CurvePoint{t[0], t[1], t[2]}, k, kp);
    return {r.t1, r.t2, r.t3};
}

TVec leaf_uniformization(cd z, cd c2, cd c4)
{
    if (c2 == 0.0 && c4 == 0.0) {
        throw Error(ErrorKind::DegenerateScale, "(c2, c4) must not both vanish");
    }
    const cd l = c4 * z - c2;
    if (std::abs(l) < 1e-300) {
        throw Error(ErrorKind::DegenerateScale, "c4 z - c2 vanishes");
    }
    const CurvePoint g = eisenstein_point(z);
    const cd l2 = l * l;
    return {g.t1 * l2 + c4 * l, g.t2 * l2 * l2, g.t3 * l2 * l2 * l2};
}

TangencyReport tangency_check(cd z, cd c2, cd c4, double tol)
{
    const double h = 1e-4;
    auto u = [&](cd w) { return leaf_uniformization(w, c2, c4); };
    const TVec a = u(z + 2 * h), b = u(z + h), c = u(z - h), d = u(z - 2 * h);
    TVec du;
    for (std::size_t i = 0; i < 3; ++i) {
        du[i] = (-a[i] + 8.0 * b[i] - 8.0 * c[i] + d[i]) / (12 * h);
    }
    const TVec r = ra_eval(u(z));
    cd num = 0;
    double den = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        num += std::conj(r[i]) * du[i];
        den += std::norm(r[i]);
    }
    TangencyReport rep;
    rep.lambda = num / den;
    TVec resid;
    for (std::size_t i = 0; i < 3; ++i) {
        resid[i] = du[i] - rep.lambda * r[i];
    }
    rep.deviation = norm3(resid) / norm3(du);
    const cd l = c4 * z - c2;
    rep.expected = 1.0 / (l * l);
    rep.pass = rep.deviation < tol;
    return rep;
}

double distance_to_singular_locus(const TVec& t)
{
    auto resid = [&](cd a) { return TVec{t[0] - a, t[1] - 12.0 * a * a, t[2] - 8.0 * a * a * a}; };
    double best = std::numeric_limits<double>::infinity();
    std::vector<cd> seeds{t[0], std::sqrt(t[1] / 12.0), -std::sqrt(t[1] / 12.0)};
    const cd cube = t[2] == 0.0 ? cd(0) : std::exp(std::log(t[2] / 8.0) / 3.0);
    const cd w(-0.5, std::sqrt(3.0) / 2);
    seeds.push_back(cube);
    seeds.push_back(cube * w);
    seeds.push_back(cube * w * w);
    for (cd a : seeds) {
        // Gauss-Newton on the holomorphic residual.
        for (int it = 0; it < 100; ++it) {
            const TVec r = resid(a);
            const TVec j{-1.0, -24.0 * a, -24.0 * a * a};
            cd jr = 0;
            double jj = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                jr += std::conj(j[i]) * r[i];
                jj += std::norm(j[i]);
            }
            const cd step = -jr / jj;
            a += step;
            if (std::abs(step) < 1e-16 * (1 + std::abs(a))) {
                break;
            }
        }
        best = std::min(best, norm3(resid(a)));
    }
    return best;
}

std::pair<long, long> best_rational(double x, long max_den)
{
    // Convergents h/k of the continued fraction of x.
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int it = 0; it < 64; ++it) {
        const double a = std::floor(r);
        if (std::abs(a) > 1e15) {
            break;
        }
        const long ai = static_cast<long>(a);
        const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        const double frac = r - a;
        if (frac < 1e-15) {
            break;
        }
        r = 1 / frac;
    }
    return {h1, k1};
}

bool k_membership_flag(const PeriodMatrix& pm, double b2_tol, double tol, long max_den)
{
    const BValues b = b_values(pm);
    if (std::abs(b.b2) >= b2_tol) {
        return false;
    }
    // Some integer combination of x2, x4 vanishes iff x2/x4 (or x4/x2) is rational.
    for (cd ratio : {pm.x2 / pm.x4, pm.x4 / pm.x2}) {
        if (!std::isfinite(ratio.real()) || std::abs(ratio.imag()) > tol * (1 + std::abs(ratio))) {
            continue;
        }
        const auto [p, q] = best_rational(ratio.real(), max_den);
        if (q > 0 && std::abs(ratio.real() - double(p) / double(q)) < tol * (1 + std::abs(ratio))) {
            return true;
        }
    }
    return false;
}

Monitors invariant_monitors(const TVec& t)
{
    Monitors m;
    m.delta = discriminant(t);
    m.dist_to_sing = distance_to_singular_locus(t);
    const PeriodMatrix pm = period_matrix(CurvePoint{t[0], t[1], t[2]});
    const BValues b = b_values(pm);
    m.b2 = b.b2;
    m.b3_abs = std::abs(b.b3);
    m.near_k = k_membership_flag(pm);
    return m;
}

FlowTrajectory flow(const TVec& start, double length, const FlowOptions& options)
{
    if (!(length >= 0)) {
        throw std::invalid_argument("flow: length must be non-negative");
    }
    auto guard = [&](const TVec& t) {
        if (norm3(ra_eval(t)) < options.singular_floor) {
            throw Error(ErrorKind::SingularApproach, "vector field vanishes (singular locus)");
        }
        if (options.discriminant_floor > 0) {
            const double tn = norm3(t);
            if (std::abs(discriminant(t)) < options.discriminant_floor * (1 + std::pow(tn, 6))) {
                throw Error(ErrorKind::DiscriminantApproach, "|Delta| fell below the configured floor");
            }
        }
    };
    auto make_sample = [&](double s, const OdeState& y) {
        FlowSample fs;
        fs.s = s;
        fs.t = {y[0], y[1], y[2]};
        fs.log_delta_predicted = y[3];
        fs.delta = discriminant(fs.t);
        const double nan = std::numeric_limits<double>::quiet_NaN();
        fs.b2 = fs.b3_abs = fs.dist_to_sing = nan;
        if (options.monitors) {
            fs.dist_to_sing = distance_to_singular_locus(fs.t);
            try {
                const PeriodMatrix pm = period_matrix(CurvePoint{fs.t[0], fs.t[1], fs.t[2]});
                const BValues b = b_values(pm);
                fs.b2 = b.b2;
                fs.b3_abs = std::abs(b.b3);
                fs.near_k = k_membership_flag(pm);
            } catch (const Error&) {
                // Periods are undefined on the discriminant; leave NaN.
            }
        }
        return fs;
    };

    guard(start);
    FlowTrajectory traj;
    // State: t1, t2, t3 and the running integral of 12 t1.
    OdeState y{start[0], start[1], start[2], 0.0};
    traj.samples.push_back(make_sample(0, y));
    auto rhs = [&](double, const OdeState& st) {
        const TVec r = ra_eval({st[0], st[1], st[2]});
        return OdeState{r[0], r[1], r[2], 12.0 * st[0]};
    };
    OdeOptions opt;
    opt.rtol = options.tol;
    opt.atol = options.tol * 1e-3;
    opt.initial_step = 1e-2;
    integrate_dp45(rhs, 0.0, length, std::move(y), opt, traj.stats, [&](double s, const OdeState& st) {
        guard({st[0], st[1], st[2]});
        traj.samples.push_back(make_sample(s, st));
    });
    return traj;
}

} // namespace modfol
