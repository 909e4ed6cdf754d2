#include "modfol/periods.hpp"

#include "modfol/error.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

namespace modfol {

namespace {

template <class Real>
long nearest(const Real& x)
{
    using std::floor;
    return static_cast<long>(floor(x + Real(0.5)));
}

template <class Real>
Real boundary_tolerance()
{
    using std::sqrt;
    return sqrt(epsilon<Real>()) / Real(10);
}

template <class Real>
Real cmax(const std::initializer_list<Complex<Real>>& values)
{
    using std::abs;
    Real m(0);
    for (const auto& v : values) {
        const Real a = abs(v);
        if (a > m) {
            m = a;
        }
    }
    return m;
}

// Roots of 4X^3 - t2 X - t3 by Cardano, polished with Newton, ordered by real
// part and then imaginary part.
template <class Real>
std::array<Complex<Real>, 3> weierstrass_roots(const Complex<Real>& t2, const Complex<Real>& t3)
{
    using C = Complex<Real>;
    using std::abs;
    const C p = -t2 / Real(4);
    const C q = -t3 / Real(4);
    const C s = std::sqrt(q * q / Real(4) + p * p * p / Real(27));
    const C w1 = -q / Real(2) + s;
    const C w2 = -q / Real(2) - s;
    const C w = abs(w1) >= abs(w2) ? w1 : w2;
    std::array<C, 3> roots;
    if (abs(w) == Real(0)) {
        roots = {C(0), C(0), C(0)};
    } else {
        const C cube = std::exp(std::log(w) / Real(3));
        using std::sqrt;
        const C omega(Real(-1) / Real(2), sqrt(Real(3)) / Real(2));
        C ck = cube;
        for (auto& r : roots) {
            r = ck - p / (Real(3) * ck);
            ck *= omega;
        }
    }
    for (auto& r : roots) {
        for (int it = 0; it < 6; ++it) {
            const C f = Real(4) * r * r * r - t2 * r - t3;
            const C df = Real(12) * r * r - t2;
            if (abs(df) == Real(0)) {
                break;
            }
            const C step = f / df;
            r -= step;
            if (abs(step) <= epsilon<Real>() * (Real(1) + abs(r))) {
                break;
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const C& a, const C& b) {
        if (a.real() != b.real()) {
            return a.real() < b.real();
        }
        return a.imag() < b.imag();
    });
    return roots;
}

// Optimal complex AGM of (a, b) together with S = sum_{n>=0} 2^{n-1} c_n^2,
// c_0^2 = a^2 - b^2, c_{n+1} = (a_n - b_n)/2.
template <class Real>
std::pair<Complex<Real>, Complex<Real>> agm_with_sum(Complex<Real> a, Complex<Real> b)
{
    using C = Complex<Real>;
    using std::abs;
    if (abs(a - b) > abs(a + b)) {
        b = -b;
    }
    C sum = (a * a - b * b) / Real(2);
    Real weight = Real(1) / Real(2);
    const Real tol = epsilon<Real>() * Real(4);
    for (int n = 1; n < 200 && abs(a - b) > tol * abs(a); ++n) {
        C a1 = (a + b) / Real(2);
        C b1 = std::sqrt(a * b);
        if (abs(a1 - b1) > abs(a1 + b1)) {
            b1 = -b1;
        }
        const C c = (a - b) / Real(2);
        weight *= Real(2);
        sum += weight * c * c;
        a = a1;
        b = b1;
    }
    return {a, sum};
}

template <class Real>
void check_discriminant(const CurvePointT<Real>& t)
{
    using std::pow;
    using std::abs;
    using std::cbrt;
    using std::max;
    using std::sqrt;
    const Real scale = Real(1) + max({Real(abs(t.t1)), Real(sqrt(abs(t.t2))), Real(cbrt(abs(t.t3)))});
    const Real d = std::abs(t.discriminant());
    if (d < Real(1e-12) * pow(scale, 6)) {
        throw Error(ErrorKind::OnDiscriminant, "27 t3^2 - t2^3 vanishes at this point");
    }
}

} // namespace

template <class Real>
ReducedTau<Real> reduce_tau(Complex<Real> tau)
{
    using std::norm;
    if (!(tau.imag() > Real(0))) {
        throw std::invalid_argument("reduce_tau: Im tau must be positive");
    }
    const Real tol = boundary_tolerance<Real>();
    IntMatrix2 acc;
    const IntMatrix2 s{0, -1, 1, 0};
    for (int it = 0; it < 10000; ++it) {
        const long n = nearest(tau.real());
        if (n != 0) {
            tau -= Real(n);
            acc = IntMatrix2{1, -n, 0, 1} * acc;
        }
        if (norm(tau) < Real(1) - tol) {
            tau = Real(-1) / tau;
            acc = s * acc;
            continue;
        }
        break;
    }
    if (tau.real() >= Real(1) / Real(2) - tol) {
        tau -= Real(1);
        acc = IntMatrix2{1, -1, 0, 1} * acc;
    }
    if (norm(tau) <= Real(1) + tol && tau.real() > tol) {
        tau = Real(-1) / tau;
        acc = s * acc;
    }
    return {tau, acc};
}

template <class Real>
bool same_orbit(const Complex<Real>& tau1, const Complex<Real>& tau2, Real tol)
{
    using std::abs;
    const auto r1 = reduce_tau(tau1).tau;
    const auto r2 = reduce_tau(tau2).tau;
    // Near the boundary, rounding can put equivalent points on opposite edges.
    for (const auto& alt : {r2, r2 + Real(1), r2 - Real(1), Real(-1) / r2, Real(-1) / r2 + Real(1),
                            Real(-1) / r2 - Real(1)}) {
        if (abs(r1 - alt) <= tol) {
            return true;
        }
    }
    return false;
}

template <class Real>
PeriodMatrixT<Real> reduce_period_matrix(const PeriodMatrixT<Real>& pm)
{
    const auto red = reduce_tau<Real>(pm.x1 / pm.x3);
    const auto& a = red.transform;
    const Real ra(a.a), rb(a.b), rc(a.c), rd(a.d);
    PeriodMatrixT<Real> out{ra * pm.x1 + rb * pm.x3, ra * pm.x2 + rb * pm.x4, rc * pm.x1 + rd * pm.x3,
                            rc * pm.x2 + rd * pm.x4};
    // -I acts trivially on tau; fix the sign by Re x3 > 0.
    if (out.x3.real() < Real(0) || (out.x3.real() == Real(0) && out.x3.imag() < Real(0))) {
        out = out * Complex<Real>(-1);
    }
    return out;
}

template <class Real>
PeriodMatrixT<Real> period_matrix(const CurvePointT<Real>& t)
{
    using C = Complex<Real>;
    using std::abs;
    check_discriminant(t);
    const auto roots = weierstrass_roots<Real>(t.t2, t.t3);
    const Real scale = Real(1) + cmax<Real>({roots[0], roots[1], roots[2]});
    const Real min_sep = std::min({abs(roots[0] - roots[1]), abs(roots[1] - roots[2]), abs(roots[0] - roots[2])});
    using std::sqrt;
    if (min_sep < Real(100) * sqrt(epsilon<Real>()) * scale) {
        std::ostringstream os;
        os << "roots of the cubic are " << static_cast<double>(min_sep) << " apart";
        throw Error(ErrorKind::RootSeparationFailure, os.str());
    }

    // Full period w and quasi-period eta attached to each root.
    std::array<C, 3> w, eta;
    for (std::size_t ia = 0; ia < 3; ++ia) {
        const C& ea = roots[ia];
        const C& eb = roots[(ia + 1) % 3];
        const C& ec = roots[(ia + 2) % 3];
        C a = std::sqrt(ea - ec);
        C b = std::sqrt(ea - eb);
        if (abs(a - b) > abs(a + b)) {
            b = -b;
        }
        const auto [m, sum] = agm_with_sum<Real>(a, b);
        w[ia] = C(pi<Real>()) / m;
        eta[ia] = -w[ia] * (ec + sum);
    }

    const C two_pi_i_val = two_pi_i<Real>();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) {
                continue;
            }
            // Legendre: eta_j w_i - eta_i w_j = 2 pi i for an oriented basis.
            const C index = (eta[j] * w[i] - eta[i] * w[j]) / two_pi_i_val;
            if (abs(index - C(1)) > Real(1e-3) || !((w[i] / w[j]).imag() > Real(0))) {
                continue;
            }
            const C s = std::sqrt(-two_pi_i_val);
            const PeriodMatrixT<Real> raw{w[i] / s, (-eta[i] + t.t1 * w[i]) / s, w[j] / s,
                                          (-eta[j] + t.t1 * w[j]) / s};
            return reduce_period_matrix(raw);
        }
    }
    throw Error(ErrorKind::RootSeparationFailure, "no oriented symplectic pair among the root periods");
}

PeriodMatrix period_matrix_general(const std::array<std::complex<double>, 4>& t)
{
    const std::complex<double> t0 = t[0];
    if (t0 == 0.0) {
        throw Error(ErrorKind::OnDiscriminant, "t0 = 0 lies on the discriminant");
    }
    const PeriodMatrix p = period_matrix(CurvePoint{t[1], t[2] / t0, t[3] / t0});
    return p * (1.0 / std::sqrt(t0));
}

Alignment align_left_sl2z(const PeriodMatrix& p, const PeriodMatrix& q, double tol)
{
    const PeriodMatrix m = p * q.inverse();
    Alignment out;
    out.transform = {std::lround(m.x1.real()), std::lround(m.x2.real()), std::lround(m.x3.real()),
                     std::lround(m.x4.real())};
    const auto& r = out.transform;
    out.integrality_error = std::max({std::abs(m.x1 - double(r.a)), std::abs(m.x2 - double(r.b)),
                                      std::abs(m.x3 - double(r.c)), std::abs(m.x4 - double(r.d))});
    out.unimodular = out.integrality_error < tol && r.det() == 1;
    const PeriodMatrix ri{double(r.a), double(r.b), double(r.c), double(r.d)};
    out.aligned = ri * q;
    return out;
}

template <class Real>
CurvePointT<Real> eisenstein_point(const Complex<Real>& z, double floor)
{
    const auto e = eisenstein_triple(z, floor);
    const auto a = g_constants_t<Real>();
    return {a[0] * e[0], a[1] * e[1], a[2] * e[2]};
}

RoundtripReport roundtrip_check(std::complex<double> z, double tol)
{
    RoundtripReport r;
    const PeriodMatrix pm = period_matrix(eisenstein_point(z));
    r.tau_reduced = reduce_tau(pm.x1 / pm.x3).tau;
    r.z_reduced = reduce_tau(z).tau;
    r.error = std::abs(r.tau_reduced - r.z_reduced);
    r.pass = same_orbit(pm.x1 / pm.x3, z, tol);
    return r;
}

template <class Real>
BValuesT<Real> b_values(const PeriodMatrixT<Real>& pm)
{
    return {(pm.x1 * std::conj(pm.x3)).imag(), (pm.x2 * std::conj(pm.x4)).imag(),
            pm.x1 * std::conj(pm.x4) - pm.x3 * std::conj(pm.x2)};
}

CurvePoint g0_act(const CurvePoint& t, std::complex<double> k, std::complex<double> kp)
{
    if (k == 0.0) {
        throw Error(ErrorKind::ZeroScale, "k must be nonzero");
    }
    const std::complex<double> ki = 1.0 / k;
    const std::complex<double> k2 = ki * ki;
    return {t.t1 * k2 + kp * ki, t.t2 * k2 * k2, t.t3 * k2 * k2 * k2};
}

BTransformationReport b_transformation_check(const CurvePoint& t, std::complex<double> k, std::complex<double> kp,
                                             double tol)
{
    BTransformationReport r;
    r.before = b_values(period_matrix(t));
    r.after = b_values(period_matrix(g0_act(t, k, kp)));
    const std::complex<double> ki = 1.0 / k;
    const auto& b = r.before;
    r.predicted.b1 = b.b1 * std::norm(k);
    r.predicted.b2 = b.b1 * std::norm(kp) + b.b2 * std::norm(ki) + (b.b3 * kp * std::conj(ki)).imag();
    r.predicted.b3 = b.b3 * k * std::conj(ki) + std::complex<double>(0, 2) * k * std::conj(kp) * b.b1;
    auto rel = [](double x, double y) { return std::abs(x - y) / (1 + std::abs(y)); };
    r.max_error = std::max({rel(r.after.b1, r.predicted.b1), rel(r.after.b2, r.predicted.b2),
                            std::abs(r.after.b3 - r.predicted.b3) / (1 + std::abs(r.predicted.b3))});
    r.pass = r.max_error < tol;
    return r;
}

std::vector<PeriodMatrix> period_matrices(const std::vector<CurvePoint>& points)
{
    const long n = static_cast<long>(points.size());
    std::vector<PeriodMatrix> out(points.size());
    std::vector<std::exception_ptr> errors(points.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = period_matrix(points[static_cast<std::size_t>(i)]);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

namespace reference {

std::vector<PeriodMatrix> period_matrices_serial(const std::vector<CurvePoint>& points)
{
    std::vector<PeriodMatrix> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        out.push_back(period_matrix(p));
    }
    return out;
}

} // namespace reference

template ReducedTau<double> reduce_tau(Complex<double>);
template ReducedTau<HighReal> reduce_tau(Complex<HighReal>);
template bool same_orbit(const Complex<double>&, const Complex<double>&, double);
template bool same_orbit(const Complex<HighReal>&, const Complex<HighReal>&, HighReal);
template PeriodMatrixT<double> period_matrix(const CurvePointT<double>&);
template PeriodMatrixT<HighReal> period_matrix(const CurvePointT<HighReal>&);
template PeriodMatrixT<double> reduce_period_matrix(const PeriodMatrixT<double>&);
template PeriodMatrixT<HighReal> reduce_period_matrix(const PeriodMatrixT<HighReal>&);
template CurvePointT<double> eisenstein_point(const Complex<double>&, double);
template CurvePointT<HighReal> eisenstein_point(const Complex<HighReal>&, double);
template BValuesT<double> b_values(const PeriodMatrixT<double>&);
template BValuesT<HighReal> b_values(const PeriodMatrixT<HighReal>&);

} // namespace modfol
