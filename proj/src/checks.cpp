#include "modfol/checks.hpp"

#include "modfol/dmf.hpp"
#include "modfol/eisenstein.hpp"
#include "modfol/error.hpp"
#include "modfol/foliation.hpp"
#include "modfol/gaussmanin.hpp"
#include "modfol/periods.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <random>
#include <sstream>

namespace modfol {

namespace {

using cd = std::complex<double>;

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

void add(CriterionResult& r, std::string name, bool pass, std::string detail = {})
{
    r.checks.push_back({std::move(name), pass, std::move(detail), false});
}

// Runs `body`; an escaping exception becomes a failed check.
void guarded(CriterionResult& r, const std::string& name, const std::function<void()>& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        add(r, name, false, std::string("exception: ") + e.what());
    }
}

// Divisor sums by trial division up to n (deliberately not modfol::sigma).
Integer sigma_naive(unsigned e, unsigned long n)
{
    Integer s = 0;
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            Integer p = 1;
            for (unsigned i = 0; i < e; ++i) {
                p *= d;
            }
            s += p;
        }
    }
    return s;
}

// q prod (1 - q^n)^24 by repeated multiplication.
QSeries eta_product(int order)
{
    QSeries acc = QSeries::monomial(1, 1, order);
    for (int n = 1; n < order; ++n) {
        QSeries f = QSeries::constant(1, order) - QSeries::monomial(n, 1, order);
        QSeries f2 = f * f;
        QSeries f8 = f2 * f2;
        f8 = f8 * f8;
        acc = acc * f8 * f8 * f8;
    }
    return acc;
}

void criterion1(CriterionResult& r, const SuiteConfig& c)
{
    const int n = c.order + 1;
    const int k_index[] = {1, 2, 3};
    const long factor[] = {-24, 240, -504};
    for (int k : k_index) {
        guarded(r, "E" + std::to_string(2 * k), [&] {
            const QSeries s = eisenstein_series(k, n).series;
            bool ok = s.coeff(0) == 1;
            int first_bad = -1;
            for (int i = 1; i <= c.order && ok; ++i) {
                if (s.coeff(i) != Rational(factor[k - 1] * sigma_naive(2 * k - 1, i))) {
                    ok = false;
                    first_bad = i;
                }
            }
            add(r, "E" + std::to_string(2 * k) + " coefficients n <= " + std::to_string(c.order), ok,
                ok ? "" : "first mismatch at n = " + std::to_string(first_bad));
        });
    }
    guarded(r, "Delta", [&] {
        const bool ok = discriminant_series(n) == eta_product(n);
        add(r, "Delta = q prod (1 - q^n)^24 to order " + std::to_string(c.order), ok);
    });
    guarded(r, "j", [&] {
        const QSeries j = j_series(4);
        const bool ok = j.valuation() <= -1 && j.coeff(-1) == 1 && j.coeff(0) == 744 && j.coeff(1) == 196884;
        add(r, "j = q^-1 + 744 + 196884 q + ...", ok, j.to_string());
    });
}

void criterion2(CriterionResult& r, const SuiteConfig& c)
{
    const int n = c.order + 1;
    guarded(r, "theta identities", [&] {
        const QSeries e2 = eisenstein_series(1, n).series;
        const QSeries e4 = eisenstein_series(2, n).series;
        const QSeries e6 = eisenstein_series(3, n).series;
        add(r, "12 theta E2 = E2^2 - E4", Rational(12) * series_theta(e2) == e2 * e2 - e4);
        add(r, "3 theta E4 = E2 E4 - E6", Rational(3) * series_theta(e4) == e2 * e4 - e6);
        add(r, "2 theta E6 = E2 E6 - E4^2", Rational(2) * series_theta(e6) == e2 * e6 - e4 * e4);
    });
    const char* expected[] = {"g1^2 - 1/12 g2", "4 g1 g2 - 6 g3", "6 g1 g3 - 1/3 g2^2"};
    for (int i = 1; i <= 3; ++i) {
        guarded(r, "D(g)", [&] {
            const DmfElement d = diff_op(DmfElement::g(i));
            const bool ok = d == parse_dmf(expected[i - 1]) && d.to_string() == expected[i - 1];
            add(r, "D(g" + std::to_string(i) + ") = " + expected[i - 1], ok, d.to_string());
            // The same identity on q-expansions: to_qseries(D f) = 12 theta to_qseries(f).
            const QSeries lhs = to_qseries(d, n);
            const QSeries rhs = Rational(12) * series_theta(to_qseries(DmfElement::g(i), n));
            add(r, "q-expansion of D(g" + std::to_string(i) + ") to order " + std::to_string(c.order), lhs == rhs);
        });
    }
}

void criterion3(CriterionResult& r, const SuiteConfig&)
{
    const DmfElement g1 = DmfElement::g(1), g2 = DmfElement::g(2), g3 = DmfElement::g(3);
    struct Eigen {
        const char* name;
        DmfElement f;
        unsigned p;
        Rational lambda;
    };
    const Eigen cases[] = {{"T2 g1 = 3/2 g1", g1, 2, Rational(3, 2)},
                           {"T3 g1 = 4/3 g1", g1, 3, Rational(4, 3)},
                           {"T2 g2 = 9 g2", g2, 2, Rational(9)},
                           {"T2 g3 = 33 g3", g3, 2, Rational(33)}};
    for (const auto& e : cases) {
        guarded(r, e.name, [&] {
            const DmfElement t = hecke(e.f, e.p);
            add(r, e.name, t == e.lambda * e.f, t.to_string());
        });
    }
    guarded(r, "sigma5 oracle", [&] {
        // T2 on E6 = 1 - 504 sum sigma5(n) q^n acts by 1 + 2^5 on each coefficient.
        const int order = 60;
        QSeries e6 = QSeries::constant(1, 2 * order);
        for (int i = 1; i < 2 * order; ++i) {
            e6 += QSeries::monomial(i, Rational(-504 * sigma_naive(5, i)), 2 * order);
        }
        const QSeries t = hecke_series(e6, 2, 6, 0);
        bool ok = t.order() >= order;
        for (int i = 0; i < order && ok; ++i) {
            ok = t.coeff(i) == Rational(33) * e6.coeff(i);
        }
        add(r, "T2 on E6 coefficients = 33 x (sigma5 oracle)", ok);
    });
    for (const auto& [name, f] : {std::pair{"g1", g1}, std::pair{"g2", g2}, std::pair{"g1 g2", g1 * g2}}) {
        guarded(r, name, [&] {
            const auto rep = hecke_composition_check(2, 2, f, 200, CompositionExponent::Stated);
            add(r, std::string("T2 T2 = T4 + 2^(m-n-1) T1 on ") + name, rep.pass, rep.detail);
            const auto alt = hecke_composition_check(2, 2, f, 200, CompositionExponent::Derived);
            r.checks.push_back({std::string("[variant] T2 T2 = T4 + 2^(m-2n-1) T1 on ") + name, alt.pass,
                                alt.detail, true});
        });
    }
}

void criterion4(CriterionResult& r, const SuiteConfig&)
{
    for (const auto& v : {verify_det_identities(), verify_basis_change()}) {
        for (const auto& ch : v) {
            add(r, ch.name, ch.pass, ch.detail);
        }
    }
    const auto co = verify_discriminant_cocycle();
    add(r, co.name, co.pass, co.detail);
}

CurvePoint random_admissible(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-3.5, 3.5);
    for (;;) {
        const CurvePoint t{cd(u(rng), u(rng)), cd(u(rng), u(rng)), cd(u(rng), u(rng))};
        if (std::abs(t.discriminant()) > 0.1) {
            return t;
        }
    }
}

void criterion5(CriterionResult& r, const SuiteConfig& c)
{
    std::mt19937_64 rng(c.seed);
    guarded(r, "det", [&] {
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            worst = std::max(worst, std::abs(period_matrix(random_admissible(rng)).det() - 1.0));
        }
        add(r, "|det pm - 1| at 20 random points", worst < c.tol.det, "max " + fmt(worst));
    });
    for (cd z : {cd(0, 2), cd(0.5, 2), cd(0.5, 0.9)}) {
        std::ostringstream name;
        name << "z = " << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
        guarded(r, name.str(), [&] {
            const auto rt = roundtrip_check(z, c.tol.roundtrip);
            add(r, "roundtrip " + name.str(), rt.pass, "error " + fmt(rt.error));
            const BValues b = b_values(period_matrix(eisenstein_point(z)));
            const double err = std::max({std::abs(b.b1 - z.imag()), std::abs(b.b2), std::abs(b.b3 - 1.0)});
            add(r, "B(g(z)) = (Im z, 0, 1) at " + name.str(), err < c.tol.bvalues, "error " + fmt(err));
        });
    }
    guarded(r, "B3 unit", [&] {
        std::uniform_real_distribution<double> u(-1, 1);
        double worst = 0, worst_b2 = 0;
        for (int i = 0; i < 5; ++i) {
            const cd z(0.5 * u(rng), 1.1 + 0.5 * std::abs(u(rng)));
            const cd c4 = std::polar(0.8 + 0.3 * std::abs(u(rng)), 3.0 * u(rng));
            const double ratio = 2 * u(rng);
            const BValues b = b_values(period_matrix(g0_act(eisenstein_point(z), 1.0 / (c4 * z - ratio * c4), c4)));
            worst = std::max(worst, std::abs(std::abs(b.b3) - 1));
            worst_b2 = std::max(worst_b2, std::abs(b.b2));
        }
        add(r, "|B3| = 1 at 5 points with B2 = 0", worst < c.tol.b3_unit && worst_b2 < c.tol.b3_unit,
            "max ||B3| - 1| " + fmt(worst) + ", max |B2| " + fmt(worst_b2));
    });
}

void criterion6(CriterionResult& r, const SuiteConfig& c)
{
    std::mt19937_64 rng(c.seed + 1);
    guarded(r, "finite differences", [&] {
        const double h = 1e-5;
        double worst = 0;
        for (int trial = 0; trial < 5; ++trial) {
            const CurvePoint t = random_admissible(rng);
            const TPoint tv{1.0, t.t1, t.t2, t.t3};
            const PeriodMatrix p = period_matrix_general(tv);
            const auto a = connection_eval(tv, BasisTag::Classical);
            for (std::size_t i = 0; i < 4; ++i) {
                auto shifted = [&](double sgn) {
                    auto v = tv;
                    v[i] += sgn * h;
                    return align_left_sl2z(p, period_matrix_general(v)).aligned;
                };
                const PeriodMatrix dp =
                    (shifted(-2) - shifted(2) + (shifted(1) - shifted(-1)) * cd(8)) * cd(1 / (12 * h));
                const PeriodMatrix pred = p * a[i].transpose();
                worst = std::max(worst, (dp - pred).max_abs() / pred.max_abs());
            }
        }
        add(r, "d pm / dt_i = pm A_i^T / Delta at 5 points", worst < c.tol.connection_rel,
            "max relative error " + fmt(worst));
    });
    guarded(r, "transport", [&] {
        const TPoint a{1.0, 0.0, 0.0, 1.0};
        const TPoint b{cd(1.2, 0.1), cd(0.3, -0.2), cd(0.5, 0.5), cd(1.5, -0.3)};
        const PeriodMatrix p0 = period_matrix_general(a);
        const auto tr = picard_fuchs_transport(p0, {a, b});
        const auto al = align_left_sl2z(tr.end, period_matrix_general(b));
        const double err = (al.aligned - tr.end).max_abs();
        add(r, "transport vs AGM modulo SL(2,Z)", al.unimodular && err < c.tol.transport, "error " + fmt(err));
    });
    guarded(r, "monodromy", [&] {
        // Circle of radius 1/2 around t3 = 1 with t2 = 3, where 27 t3^2 = t2^3.
        std::vector<TPoint> loop;
        for (int k = 0; k <= 64; ++k) {
            loop.push_back({1.0, 0.0, 3.0, 1.0 + 0.5 * std::polar(1.0, 2 * M_PI * k / 64)});
        }
        const PeriodMatrix p0 = period_matrix_general(loop.front());
        const PeriodMatrix m = picard_fuchs_transport(p0, loop).end * p0.inverse();
        double err = std::abs(m.det() - 1.0);
        for (cd v : {m.x1, m.x2, m.x3, m.x4}) {
            err = std::max(err, std::abs(v - std::round(v.real())));
        }
        std::ostringstream os;
        os << "M = [" << std::lround(m.x1.real()) << " " << std::lround(m.x2.real()) << "; "
           << std::lround(m.x3.real()) << " " << std::lround(m.x4.real()) << "], error " << fmt(err);
        add(r, "monodromy around Delta = 0 in SL(2,Z)", err < c.tol.transport, os.str());
    });
}

TVec gpoint(cd z)
{
    const CurvePoint g = eisenstein_point(z);
    return {g.t1, g.t2, g.t3};
}

double tdist(const TVec& a, const TVec& b)
{
    return std::sqrt(std::norm(a[0] - b[0]) + std::norm(a[1] - b[1]) + std::norm(a[2] - b[2]));
}

void criterion7(CriterionResult& r, const SuiteConfig& c)
{
    const cd z0(0, 2);
    const TVec start = gpoint(z0);
    const double scale = tdist(start, {});
    guarded(r, "closed orbit", [&] {
        const auto tr = flow(start, 1.0, {.monitors = false});
        const double err = tdist(tr.samples.back().t, start) / scale;
        add(r, "flow from g(2i) returns after s = 1", err < c.tol.closed_orbit, "relative error " + fmt(err));
    });
    guarded(r, "flow vs Eisenstein", [&] {
        double worst = 0;
        for (int k = 1; k <= 10; ++k) {
            const double s = 0.1 * k - 0.03;
            const TVec expect = gpoint(z0 + s);
            const auto tr = flow(start, s, {.monitors = false});
            worst = std::max(worst, tdist(tr.samples.back().t, expect) / tdist(expect, {}));
        }
        add(r, "flow(s) = g(2i + s) at 10 samples", worst < c.tol.flow_match, "max relative error " + fmt(worst));
    });
    guarded(r, "B2 drift", [&] {
        const cd z(0.1, 1.3), c4(0.9, -0.3);
        const cd c2 = c4 * z - cd(1.1, 0.1);
        const auto tr = flow(leaf_uniformization(z, c2, c4), 0.5);
        double drift = 0;
        for (const auto& fs : tr.samples) {
            drift = std::max(drift, std::abs(fs.b2 - tr.samples.front().b2));
        }
        add(r, "B2 constant along a uniformized leaf", drift < c.tol.b2_drift && tr.samples.size() > 5,
            "max drift " + fmt(drift) + " over " + std::to_string(tr.samples.size()) + " samples");
    });
    for (const auto& ch : verify_eta_annihilation()) {
        add(r, ch.name, ch.pass, ch.detail);
    }
    guarded(r, "tangency", [&] {
        const auto a = tangency_check(cd(0, 2), 1.0, 1.0, c.tol.tangency);
        const auto b = tangency_check(cd(0.3, 1.4), cd(0.7, -0.4), cd(-0.2, 1.1), c.tol.tangency);
        add(r, "u(z, c2, c4) tangent to Ra", a.pass && b.pass,
            "deviation " + fmt(std::max(a.deviation, b.deviation)));
    });
    const auto alt = alt_field_check();
    add(r, alt.name, alt.pass, alt.detail);
}

void criterion8(CriterionResult& r, const SuiteConfig& c)
{
    std::mt19937_64 rng(c.seed + 2);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
    int spaces = 0, failures = 0;
    std::string first_failure;
    for (int m = 0; m <= 20; m += 2) {
        for (int n = 0; n <= m / 2; ++n) {
            ++spaces;
            try {
                const auto basis = basis_and_dimension(n, m);
                DmfElement f;
                for (const auto& e : basis) {
                    f.add_term(e, Rational(num(rng), den(rng)));
                }
                const DmfElement back = reconstruct(to_qseries(f, static_cast<int>(basis.size()) + 8), n, m);
                if (!(back == f)) {
                    throw std::runtime_error("reconstruction differs");
                }
            } catch (const std::exception& e) {
                if (failures++ == 0) {
                    first_failure = "M^" + std::to_string(n) + "_" + std::to_string(m) + ": " + e.what();
                }
            }
        }
    }
    add(r, "unique reconstruction in " + std::to_string(spaces) + " spaces M^n_m (m <= 20)", failures == 0,
        first_failure);
}

const char* kTitles[] = {"exact q-series",       "Ramanujan identities",   "Hecke operators",
                         "symbolic Gauss-Manin",  "numeric periods",        "connection consistency",
                         "foliation",             "reconstruction over M^n_m"};
const double kLimits[] = {10, 0, 0, 5, 30, 0, 30, 0};

} // namespace

CriterionResult run_criterion(int id, const SuiteConfig& config)
{
    if (id < 1 || id > kCriterionCount) {
        throw std::invalid_argument("unknown criterion " + std::to_string(id));
    }
    CriterionResult r;
    r.id = id;
    r.title = kTitles[id - 1];
    r.time_limit = kLimits[id - 1];
    using fn = void (*)(CriterionResult&, const SuiteConfig&);
    const fn table[] = {criterion1, criterion2, criterion3, criterion4,
                        criterion5, criterion6, criterion7, criterion8};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        table[id - 1](r, config);
    } catch (const std::exception& e) {
        add(r, "suite", false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.pass = !r.checks.empty();
    for (const auto& ch : r.checks) {
        r.pass = r.pass && (ch.pass || ch.informational);
    }
    if (r.time_limit > 0 && r.seconds >= r.time_limit) {
        r.pass = false;
        r.checks.push_back({"runtime", false, fmt(r.seconds) + " s exceeds " + fmt(r.time_limit) + " s", false});
    }
    return r;
}

std::vector<CriterionResult> run_criteria(const SuiteConfig& config, const std::vector<int>& ids)
{
    std::vector<int> which = ids;
    if (which.empty()) {
        for (int i = 1; i <= kCriterionCount; ++i) {
            which.push_back(i);
        }
    }
    // Sequential so that the per-suite runtime limits measure each suite alone.
    std::vector<CriterionResult> out;
    for (int id : which) {
        out.push_back(run_criterion(id, config));
    }
    return out;
}

} // namespace modfol
