#pragma once

#include "modfol/gaussmanin.hpp"
#include "modfol/mpoly.hpp"
#include "modfol/ode.hpp"
#include "modfol/periods.hpp"

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace modfol {

// Points (t1, t2, t3) of the t0 = 1 slice.
using TVec = std::array<std::complex<double>, 3>;

/// Ra(t) = (t1^2 - t2/12, 4 t1 t2 - 6 t3, 6 t1 t3 - t2^2/3).
TVec ra_eval(const TVec& t);

/// Coefficients (on dt1, dt2, dt3) of the three forms annihilating Ra.
std::array<TVec, 3> eta_eval(const TVec& t);

/// 27 t3^2 - t2^3
std::complex<double> discriminant(const TVec& t);

/// Polynomial versions in the variables t_0..t_3 (t_0 unused).
std::array<MPoly, 3> ra_poly();
std::array<std::array<MPoly, 3>, 3> eta_poly();

/// eta_i(Ra) = 0 as polynomials, i = 1, 2, 3.
std::vector<IdentityCheck> verify_eta_annihilation();
/// d(27 t3^2 - t2^3)(Ra) = 12 t1 (27 t3^2 - t2^3).
IdentityCheck verify_discriminant_cocycle();

/// Jacobian of t -> (12 t1, -12 t1^2 + t2, 4 t1^3 - t2 t1 + t3) applied to Ra
/// equals (-s2, -6 s3, s1 s3 - s2^2/4) composed with that map.
IdentityCheck alt_field_check();
TVec alt_chart(const TVec& t);
TVec alt_field(const TVec& s);

/// t . g for g = (k k'; 0 1/k). Throws Error(ZeroScale) for k = 0.
TVec g0_action(const TVec& t, std::complex<double> k, std::complex<double> kp);

/// u(z, c2, c4) = (g1 L^2 + c4 L, g2 L^4, g3 L^6), L = c4 z - c2. Throws
/// Error(DegenerateScale) when (c2, c4) = 0 or L = 0.
TVec leaf_uniformization(std::complex<double> z, std::complex<double> c2, std::complex<double> c4);

struct TangencyReport {
    bool pass = false;
    double deviation = 0;            // |du/dz - lambda Ra| / |du/dz| for the best lambda
    std::complex<double> lambda;     // fitted factor
    std::complex<double> expected;   // L^-2
};

TangencyReport tangency_check(std::complex<double> z, std::complex<double> c2, std::complex<double> c4,
                              double tol = 1e-6);

/// min over complex a of |t - (a, 12 a^2, 8 a^3)| (Euclidean).
double distance_to_singular_locus(const TVec& t);

struct Monitors {
    double b2 = 0;
    double b3_abs = 0;
    double dist_to_sing = 0;
    std::complex<double> delta;
    bool near_k = false; // B2 ~ 0 and x2/x4 close to a rational of small height
};

/// Errors from the period computation propagate.
Monitors invariant_monitors(const TVec& t);

/// Heuristic: |B2| < b2_tol and x2/x4 within `tol` of p/q with q <= max_den.
bool k_membership_flag(const PeriodMatrix& pm, double b2_tol = 1e-8, double tol = 1e-9, long max_den = 10000);

struct FlowOptions {
    double tol = 1e-10;
    /// Halt when |Delta| < factor (1 + |t|^6); 0 disables the check.
    double discriminant_floor = 1e-8;
    /// Halt when |Ra(t)| falls below this.
    double singular_floor = 1e-12;
    bool monitors = true;
};

struct FlowSample {
    double s = 0;
    TVec t{};
    std::complex<double> delta;
    /// integral of 12 t1 ds from 0 to s, i.e. the predicted log(Delta(s)/Delta(0)).
    std::complex<double> log_delta_predicted;
    /// NaN when monitors are disabled or periods are undefined at t.
    double b2 = 0;
    double b3_abs = 0;
    double dist_to_sing = 0;
    bool near_k = false;
};

struct FlowTrajectory {
    std::vector<FlowSample> samples;
    OdeStats stats;
};

/// Integrates dt/ds = Ra(t) for real s in [0, length]. Throws
/// Error(SingularApproach) or Error(DiscriminantApproach).
FlowTrajectory flow(const TVec& start, double length, const FlowOptions& options = {});

/// Nearest rational p/q with q <= max_den via continued fractions.
std::pair<long, long> best_rational(double x, long max_den);

} // namespace modfol
