#pragma once

#include <optional>
#include <string>
#include <vector>

#include "helixlab/curve.hpp"

namespace helixlab {

constexpr double kDefaultKappaFloor = 1e-12;
constexpr double kDefaultQuadTol = 1e-10;

/// Frenet apparatus at one parameter value. The derivative quantities
/// (kappa', tau') are per arc length regardless of the parametrization.
struct FrenetSample {
    double t = 0.0;
    double speed = 0.0;  // |alpha'(t)|
    Vec3 T, N, B;
    double kappa = 0.0;
    double tau = 0.0;
    double dkappa_ds = 0.0;
    double dtau_ds = 0.0;
};

/// Frenet frame, curvature, and torsion from raw parameter-derivatives:
///   v = |d1|, T = d1/v, kappa = |d1 x d2| / v^3,
///   B = (d1 x d2)/|d1 x d2|, N = B x T,
///   tau = <d1 x d2, d3> / |d1 x d2|^2.
/// `has_tau` is false when d3 is not supplied. Throws ZeroSpeedError /
/// DegenerateCurvatureError (with `param` in the message).
struct FrenetCore {
    double speed = 0.0;
    Vec3 T, N, B;
    double kappa = 0.0;
    double tau = 0.0;
    bool has_tau = false;
};

FrenetCore frenet_core(double param, const Vec3& d1, const Vec3& d2,
                       const std::optional<Vec3>& d3 = std::nullopt,
                       double kappa_floor = kDefaultKappaFloor);

/// Full Frenet apparatus of an analytic curve at t, including dkappa/ds and
/// dtau/ds obtained by jet arithmetic on the closed-form expressions of
/// kappa(t), tau(t) and the chain rule (division by the speed).
FrenetSample frenet_at(const CurveSpec& spec, double t,
                       double kappa_floor = kDefaultKappaFloor);

/// One grid point of an analysis profile. Degenerate points (curvature under
/// the floor) are gaps, not failures: `defined` is false and `gap_reason`
/// says why.
struct ProfilePoint {
    double t = 0.0;  // curve parameter (equals s for intrinsic specs)
    double s = 0.0;  // arc length accumulated from the domain start
    Vec3 pos;
    bool defined = false;
    FrenetSample frenet;                  // valid when defined
    std::optional<double> d2kappa_ds2;    // intrinsic specs only
    std::optional<double> d2tau_ds2;
    std::string gap_reason;               // set when !defined
};

/// frenet_at on a uniform n-point t-grid including both endpoints (analytic
/// specs). The arc-length column comes from interval-by-interval quadrature.
std::vector<ProfilePoint> frenet_profile(const CurveSpec& spec, int n_samples,
                                         double kappa_floor = kDefaultKappaFloor,
                                         double quad_tol = kDefaultQuadTol);

/// Uniform analysis grid for either curve kind: frenet_profile for analytic
/// specs; Frenet-ODE integration (substeps bounded by the spec step) plus
/// kappa/tau expression jets for intrinsic ones.
std::vector<ProfilePoint> analysis_grid(const CurveSpec& spec, int n_samples,
                                        double kappa_floor = kDefaultKappaFloor,
                                        double quad_tol = kDefaultQuadTol);

std::size_t count_defined(const std::vector<ProfilePoint>& grid);

}  // namespace helixlab
