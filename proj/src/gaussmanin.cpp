#include "modfol/gaussmanin.hpp"

#include "modfol/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>

#include <sstream>

namespace modfol {

namespace {

// Entries (A00, A01, A10, A11) of A_0..A_3.
constexpr EntryTable kCanonical{{
    {"21/2t_0t_1t_2t_3-9t_0t_3^2+3/4t_2^3", "-21/2t_0t_2t_3",
     "21/2t_0t_1^2t_2t_3+9t_0t_1t_3^2-1/2t_1t_2^3-5/8t_2^2t_3", "-21/2t_0t_1t_2t_3-18t_0t_3^2+5/4t_2^3"},
    {"0", "0", "27t_0^2t_3^2-t_0t_2^3", "0"},
    {"-63/2t_0^2t_1t_3-5/4t_0t_2^2", "63/2t_0^2t_3", "-63/2t_0^2t_1^2t_3+1/2t_0t_1t_2^2+15/8t_0t_2t_3",
     "63/2t_0^2t_1t_3-7/4t_0t_2^2"},
    {"21t_0^2t_1t_2+45/2t_0^2t_3", "-21t_0^2t_2", "21t_0^2t_1^2t_2-9t_0^2t_1t_3-5/4t_0t_2^2",
     "-21t_0^2t_1t_2+63/2t_0^2t_3"},
}};

constexpr EntryTable kClassical{{
    {"3/2t_0t_1t_2t_3-9t_0t_3^2+1/4t_2^3", "-3/2t_0t_2t_3",
     "3/2t_0t_1^2t_2t_3+9t_0t_1t_3^2-1/2t_1t_2^3+1/8t_2^2t_3", "-3/2t_0t_1t_2t_3-18t_0t_3^2+3/4t_2^3"},
    {"0", "0", "27t_0^2t_3^2-t_0t_2^3", "0"},
    {"-9/2t_0^2t_1t_3+1/4t_0t_2^2", "9/2t_0^2t_3", "-9/2t_0^2t_1^2t_3+1/2t_0t_1t_2^2-3/8t_0t_2t_3",
     "9/2t_0^2t_1t_3-1/4t_0t_2^2"},
    {"3t_0^2t_1t_2-9/2t_0^2t_3", "-3t_0^2t_2", "3t_0^2t_1^2t_2-9t_0^2t_1t_3+1/4t_0t_2^2",
     "-3t_0^2t_1t_2+9/2t_0^2t_3"},
}};

IdentityCheck poly_check(std::string name, const MPoly& lhs, const MPoly& rhs)
{
    IdentityCheck c{std::move(name), lhs == rhs, {}};
    if (!c.pass) {
        c.detail = "difference: " + (lhs - rhs).to_compact_string();
    }
    return c;
}

} // namespace

std::string_view to_string(BasisTag tag)
{
    return tag == BasisTag::Canonical ? "canonical" : "classical";
}

const EntryTable& published_entries(BasisTag tag)
{
    return tag == BasisTag::Canonical ? kCanonical : kClassical;
}

MPoly discriminant_poly()
{
    return parse_compact_mpoly("27t_0^2t_3^2-t_0t_2^3");
}

ConnectionMatrices matrices(BasisTag tag)
{
    ConnectionMatrices cm;
    cm.basis = tag;
    cm.discriminant = discriminant_poly();
    const auto& table = published_entries(tag);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
            cm.a[i].e[k / 2][k % 2] = parse_compact_mpoly(table[i][k]);
        }
    }
    return cm;
}

std::vector<IdentityCheck> verify_det_identities()
{
    const auto cl = matrices(BasisTag::Classical);
    const auto ca = matrices(BasisTag::Canonical);
    const MPoly& delta = cl.discriminant;
    const MPoly t0 = MPoly::variable(0);

    std::vector<std::vector<MPoly>> b;
    for (const auto& a : cl.a) {
        b.push_back({a.e[0][0], a.e[0][1], a.e[1][0], a.e[1][1]});
    }
    std::vector<IdentityCheck> out;
    out.push_back(poly_check("det(B) = 3/4 t0 Delta^3", poly_det(b), Rational(3, 4) * t0 * delta.pow(3)));
    out.push_back(poly_check("det(A3 canonical) = 105/4 t0^2 Delta", ca.a[3].det(),
                             Rational(105, 4) * t0.pow(2) * delta));
    out.push_back(poly_check("det(A1 classical) = 0", cl.a[1].det(), MPoly()));
    return out;
}

std::vector<IdentityCheck> verify_basis_change()
{
    const auto cl = matrices(BasisTag::Classical);
    const auto ca = matrices(BasisTag::Canonical);
    const MPoly& delta = cl.discriminant;
    const PolyMatrix2& m = ca.a[3];
    const MPoly det_m = m.det();
    const PolyMatrix2 adj = m.adjugate();

    // S = M / Delta, S^-1 = Delta adj(M) / det M, dS = (Delta dM - M dDelta) / Delta^2.
    // Multiplying the identity by Delta det M leaves polynomials on both sides.
    auto rhs_for = [&](std::size_t i) {
        return (m.derivative(i) * delta - m * delta.derivative(i)) * adj + m * ca.a[i] * adj;
    };

    std::vector<IdentityCheck> out;
    {
        const PolyMatrix2 id = m * adj;
        const PolyMatrix2 expected{{{{det_m, MPoly()}, {MPoly(), det_m}}}};
        IdentityCheck c{"S S^-1 = I", id == expected, {}};
        out.push_back(c);
    }
    out.push_back(poly_check("trace identity, i = 3", cl.a[3].trace() * det_m, rhs_for(3).trace()));
    for (std::size_t i = 0; i < 4; ++i) {
        const PolyMatrix2 lhs = cl.a[i] * det_m;
        const PolyMatrix2 rhs = rhs_for(i);
        IdentityCheck c{"basis change, i = " + std::to_string(i), lhs == rhs, {}};
        if (!c.pass) {
            std::ostringstream os;
            for (int r = 0; r < 2; ++r) {
                for (int k = 0; k < 2; ++k) {
                    const MPoly d = lhs.e[r][k] - rhs.e[r][k];
                    if (!d.is_zero()) {
                        os << "[" << r << "," << k << "] " << d.to_compact_string() << "; ";
                    }
                }
            }
            c.detail = os.str();
        }
        out.push_back(c);
    }
    return out;
}

bool near_discriminant(const TPoint& t, std::complex<double> delta, double factor)
{
    // Weighted size: Delta is homogeneous of degree 6 in rho, quadratic in t0.
    const double rho = std::max({std::abs(t[1]), std::sqrt(std::abs(t[2])), std::cbrt(std::abs(t[3]))});
    return std::abs(delta) < factor * std::pow(1 + std::abs(t[0]), 2) * std::pow(1 + rho, 6);
}

std::array<CMat2<double>, 4> connection_eval(const TPoint& t, BasisTag tag)
{
    const auto cm = matrices(tag);
    const std::span<const std::complex<double>> pt(t);
    const std::complex<double> delta = cm.discriminant.evaluate<double>(pt);
    if (near_discriminant(t, delta)) {
        throw Error(ErrorKind::OnDiscriminant, "|Delta(t)| is below the discriminant floor");
    }
    std::array<CMat2<double>, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& a = cm.a[i].e;
        out[i] = CMat2<double>{a[0][0].evaluate<double>(pt), a[0][1].evaluate<double>(pt),
                               a[1][0].evaluate<double>(pt), a[1][1].evaluate<double>(pt)} *
                 (1.0 / delta);
    }
    return out;
}

TransportResult picard_fuchs_transport(const CMat2<double>& pm0, const std::vector<TPoint>& waypoints, BasisTag tag,
                                       const OdeOptions& options)
{
    if (waypoints.empty()) {
        throw std::invalid_argument("picard_fuchs_transport: path needs at least one waypoint");
    }
    const auto cm = matrices(tag);
    TransportResult result;
    result.min_abs_delta = std::numeric_limits<double>::infinity();
    OdeState y{pm0.x1, pm0.x2, pm0.x3, pm0.x4};

    for (std::size_t seg = 0; seg + 1 < waypoints.size(); ++seg) {
        const TPoint& from = waypoints[seg];
        const TPoint& to = waypoints[seg + 1];
        TPoint velocity;
        for (std::size_t i = 0; i < 4; ++i) {
            velocity[i] = to[i] - from[i];
        }
        auto rhs = [&](double s, const OdeState& state) {
            TPoint t;
            for (std::size_t i = 0; i < 4; ++i) {
                t[i] = from[i] + s * velocity[i];
            }
            const std::span<const std::complex<double>> pt(t);
            const std::complex<double> delta = cm.discriminant.evaluate<double>(pt);
            result.min_abs_delta = std::min(result.min_abs_delta, std::abs(delta));
            if (near_discriminant(t, delta)) {
                throw Error(ErrorKind::OnDiscriminant, "transport path reaches the discriminant");
            }
            // Omega = sum_i A_i dt_i/ds / Delta; d(pm)/ds = pm Omega^T.
            std::array<std::complex<double>, 4> omega{};
            for (std::size_t i = 0; i < 4; ++i) {
                if (velocity[i] == 0.0) {
                    continue;
                }
                const auto& a = cm.a[i].e;
                omega[0] += velocity[i] * a[0][0].evaluate<double>(pt);
                omega[1] += velocity[i] * a[0][1].evaluate<double>(pt);
                omega[2] += velocity[i] * a[1][0].evaluate<double>(pt);
                omega[3] += velocity[i] * a[1][1].evaluate<double>(pt);
            }
            const CMat2<double> om{omega[0] / delta, omega[1] / delta, omega[2] / delta, omega[3] / delta};
            const CMat2<double> p{state[0], state[1], state[2], state[3]};
            const CMat2<double> d = p * om.transpose();
            return OdeState{d.x1, d.x2, d.x3, d.x4};
        };
        y = integrate_dp45(rhs, 0.0, 1.0, std::move(y), options, result.stats);
    }
    if (waypoints.size() == 1) {
        const std::span<const std::complex<double>> pt(waypoints[0]);
        result.min_abs_delta = std::abs(cm.discriminant.evaluate<double>(pt));
    }
    result.end = CMat2<double>{y[0], y[1], y[2], y[3]};
    return result;
}

std::vector<TPoint> parse_waypoints_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid JSON path");
    }
    if (!j.is_array()) {
        throw ParseError(0, "path must be a JSON array of waypoints");
    }
    std::vector<TPoint> out;
    for (const auto& w : j) {
        if (!w.is_array() || w.size() != 4) {
            throw ParseError(0, "each waypoint must list t0, t1, t2, t3");
        }
        TPoint p;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& v = w[i];
            if (v.is_number()) {
                p[i] = v.get<double>();
            } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
                p[i] = {v[0].get<double>(), v[1].get<double>()};
            } else {
                throw ParseError(0, "coordinates must be numbers or [re, im] pairs");
            }
        }
        out.push_back(p);
    }
    return out;
}

} // namespace modfol
