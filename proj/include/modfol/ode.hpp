#pragma once

#include "modfol/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace modfol {

using OdeState = std::vector<std::complex<double>>;

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-13;
    double initial_step = 1e-3;
    double min_step = 1e-14;
    long max_steps = 200000;
};

struct OdeStats {
    long accepted = 0;
    long rejected = 0;
    long evaluations = 0;
};

/// Dormand-Prince 5(4) with the standard PI-free step controller, integrating
/// y' = f(s, y) from s0 to s1 (s1 > s0). `on_step(s, y)` runs after every
/// accepted step; it may throw to abort. Throws Error(StepFailure) when the
/// step size collapses or the step budget is exhausted.
template <class Rhs, class OnStep>
OdeState integrate_dp45(Rhs&& f, double s0, double s1, OdeState y, const OdeOptions& opt, OdeStats& stats,
                        OnStep&& on_step)
{
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    // Error weights: fifth-order minus embedded fourth-order coefficients.
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    const std::size_t n = y.size();
    double s = s0;
    double h = std::min(opt.initial_step, s1 - s0);
    OdeState k1 = f(s, y), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), ynew(n);
    ++stats.evaluations;
    auto combo = [&](std::initializer_list<std::pair<double, const OdeState*>> terms) {
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> acc = y[i];
            for (const auto& [w, k] : terms) {
                acc += h * w * (*k)[i];
            }
            tmp[i] = acc;
        }
        return tmp;
    };
    while (s < s1) {
        if (stats.accepted + stats.rejected >= opt.max_steps) {
            throw Error(ErrorKind::StepFailure, "step budget exhausted at s = " + std::to_string(s));
        }
        const bool last = s + h >= s1;
        if (last) {
            h = s1 - s;
        }
        k2 = f(s + c2 * h, combo({{a21, &k1}}));
        k3 = f(s + c3 * h, combo({{a31, &k1}, {a32, &k2}}));
        k4 = f(s + c4 * h, combo({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        k5 = f(s + c5 * h, combo({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        k6 = f(s + h, combo({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        ynew = combo({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        k7 = f(s + h, ynew);
        stats.evaluations += 6;
        double err = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::complex<double> e =
                h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double scale = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err = std::max(err, std::abs(e) / scale);
        }
        if (!std::isfinite(err)) {
            err = 1e10;
        }
        if (err <= 1.0) {
            s = last ? s1 : s + h;
            y = ynew;
            k1 = k7;
            ++stats.accepted;
            on_step(s, y);
        } else {
            ++stats.rejected;
        }
        const double factor = err == 0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
        if (h < opt.min_step && s < s1) {
            throw Error(ErrorKind::StepFailure, "step size underflow at s = " + std::to_string(s));
        }
    }
    return y;
}

template <class Rhs>
OdeState integrate_dp45(Rhs&& f, double s0, double s1, OdeState y, const OdeOptions& opt, OdeStats& stats)
{
    return integrate_dp45(std::forward<Rhs>(f), s0, s1, std::move(y), opt, stats, [](double, const OdeState&) {});
}

} // namespace modfol
