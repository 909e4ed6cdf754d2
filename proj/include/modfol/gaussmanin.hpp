#pragma once

#include "modfol/mpoly.hpp"
#include "modfol/numeric.hpp"
#include "modfol/ode.hpp"

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace modfol {

// Curve family y^2 = 4 t0 (x - t1)^3 - t2 (x - t1) - t3.
//   Canonical: the basis built from (2x dy - 3y dx) and its x-multiple.
//   Classical: (dx/y, x dx/y).
enum class BasisTag { Canonical, Classical };

std::string_view to_string(BasisTag tag);

/// Connection form (1/Delta) sum_i A_i dt_i with polynomial numerators.
struct ConnectionMatrices {
    BasisTag basis = BasisTag::Classical;
    std::array<PolyMatrix2, 4> a;
    MPoly discriminant;
};

/// Matrix entries as published, row major, for i = 0..3.
using EntryTable = std::array<std::array<std::string_view, 4>, 4>;
const EntryTable& published_entries(BasisTag tag);

/// t0 (27 t0 t3^2 - t2^3)
MPoly discriminant_poly();

ConnectionMatrices matrices(BasisTag tag);

struct IdentityCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// det of the 4x4 matrix whose rows are the classical A_i flattened equals
/// (3/4) t0 Delta^3; det(canonical A3) = (105/4) t0^2 Delta; det(classical A1) = 0.
std::vector<IdentityCheck> verify_det_identities();

/// With S = A3^canonical / Delta, checks for every i that the classical
/// connection equals dS S^-1 + S A_i S^-1 after clearing denominators, plus a
/// trace check and S S^-1 = I.
std::vector<IdentityCheck> verify_basis_change();

/// A_i(t) / Delta(t) at a complex point (t0, t1, t2, t3). Throws
/// Error(OnDiscriminant) when |Delta(t)| < 1e-12 (1 + |t0|)^2 (1 + rho)^6,
/// rho = max(|t1|, |t2|^(1/2), |t3|^(1/3)).
std::array<CMat2<double>, 4> connection_eval(const std::array<std::complex<double>, 4>& t, BasisTag tag);

bool near_discriminant(const std::array<std::complex<double>, 4>& t, std::complex<double> delta, double factor = 1e-12);

using TPoint = std::array<std::complex<double>, 4>;

struct TransportResult {
    CMat2<double> end;
    double min_abs_delta = 0;
    OdeStats stats;
};

/// Solves d(pm) = pm A^T along the polyline through `waypoints` (each a full
/// t = (t0, ..., t3)), starting from pm0 at waypoints.front().
TransportResult picard_fuchs_transport(const CMat2<double>& pm0, const std::vector<TPoint>& waypoints,
                                       BasisTag tag = BasisTag::Classical, const OdeOptions& options = {});

/// Parses [[t0,t1,t2,t3], ...] where each entry is a number or [re, im].
std::vector<TPoint> parse_waypoints_json(std::string_view text);

} // namespace modfol
