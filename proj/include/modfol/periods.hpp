#pragma once

#include "modfol/eisenstein.hpp"
#include "modfol/numeric.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace modfol {

/// (t1, t2, t3) on the slice t0 = 1.
template <class Real>
struct CurvePointT {
    Complex<Real> t1, t2, t3;

    Complex<Real> discriminant() const { return Real(27) * t3 * t3 - t2 * t2 * t2; }
};
using CurvePoint = CurvePointT<double>;

/// Normalized period matrix (x1 x2; x3 x4): rows are the cycles delta_1,
/// delta_2, columns integrate dx/y and x dx/y, everything divided by
/// sqrt(-2 pi i). Oriented so that Im(x1 conj(x3)) > 0, det = 1.
template <class Real>
using PeriodMatrixT = CMat2<Real>;
using PeriodMatrix = PeriodMatrixT<double>;

/// Integer matrix (a b; c d) acting on tau by (a tau + b) / (c tau + d).
struct IntMatrix2 {
    long a = 1, b = 0, c = 0, d = 1;

    long det() const { return a * d - b * c; }
    IntMatrix2 operator*(const IntMatrix2& o) const
    {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const IntMatrix2&) const = default;
};

template <class Real>
struct ReducedTau {
    Complex<Real> tau;
    IntMatrix2 transform; // tau = transform . input
};

/// Moves tau into -1/2 <= Re < 1/2, |tau| >= 1 (boundary points on the right
/// half of the arc are sent to the left). Requires Im tau > 0.
template <class Real>
ReducedTau<Real> reduce_tau(Complex<Real> tau);

/// True when tau1, tau2 are SL(2,Z)-equivalent up to `tol` after reduction.
template <class Real>
bool same_orbit(const Complex<Real>& tau1, const Complex<Real>& tau2, Real tol);

/// Computes the period matrix. Throws Error(OnDiscriminant) when
/// |27 t3^2 - t2^3| < 1e-12 (1 + rho)^6, rho = max(|t1|, |t2|^(1/2), |t3|^(1/3)), and Error(RootSeparationFailure)
/// when the cubic's roots are not resolvable.
template <class Real>
PeriodMatrixT<Real> period_matrix(const CurvePointT<Real>& t);

/// Any t0 != 0: pm(t) = t0^(-1/2) pm(1, t1, t2/t0, t3/t0).
PeriodMatrix period_matrix_general(const std::array<std::complex<double>, 4>& t);

/// Left-multiplies pm by the SL(2,Z) matrix that reduces x1/x3.
template <class Real>
PeriodMatrixT<Real> reduce_period_matrix(const PeriodMatrixT<Real>& pm);

/// Brings q into the left SL(2,Z) class representative closest to p: returns
/// round(p q^-1) q. `unimodular` reports whether the rounded matrix has
/// integer entries within `tol` and determinant 1.
struct Alignment {
    PeriodMatrix aligned;
    IntMatrix2 transform;
    double integrality_error = 0;
    bool unimodular = false;
};
Alignment align_left_sl2z(const PeriodMatrix& p, const PeriodMatrix& q, double tol = 1e-6);

/// g(z) = (a1 E2(z), a2 E4(z), a3 E6(z)). Throws Error(LowImaginaryPart).
template <class Real>
CurvePointT<Real> eisenstein_point(const Complex<Real>& z, double floor = kImaginaryFloor);

struct RoundtripReport {
    bool pass = false;
    std::complex<double> tau_reduced;
    std::complex<double> z_reduced;
    double error = 0;
};

/// Compares reduce_tau(x1/x3 of pm(g(z))) with reduce_tau(z).
RoundtripReport roundtrip_check(std::complex<double> z, double tol = 1e-8);

template <class Real>
struct BValuesT {
    Real b1 = 0;
    Real b2 = 0;
    Complex<Real> b3;
};
using BValues = BValuesT<double>;

/// B1 = Im(x1 conj x3), B2 = Im(x2 conj x4), B3 = x1 conj x4 - x3 conj x2.
template <class Real>
BValuesT<Real> b_values(const PeriodMatrixT<Real>& pm);

/// t . g for g = (k k'; 0 1/k) on the t0 = 1 slice. Throws Error(ZeroScale).
CurvePoint g0_act(const CurvePoint& t, std::complex<double> k, std::complex<double> kp);

struct BTransformationReport {
    bool pass = false;
    BValues before;
    BValues after;
    BValues predicted;
    double max_error = 0;
};

BTransformationReport b_transformation_check(const CurvePoint& t, std::complex<double> k, std::complex<double> kp,
                                             double tol = 1e-8);

/// x2 / x1: ratio of the second-kind to the first-kind integral over delta_1.
template <class Real>
Complex<Real> second_kind_ratio(const PeriodMatrixT<Real>& pm)
{
    return pm.x2 / pm.x1;
}

/// pm at many points; OpenMP-parallel over points.
std::vector<PeriodMatrix> period_matrices(const std::vector<CurvePoint>& points);

namespace reference {

std::vector<PeriodMatrix> period_matrices_serial(const std::vector<CurvePoint>& points);

} // namespace reference

} // namespace modfol
