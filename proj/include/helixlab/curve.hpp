#pragma once

#include <vector>

#include "helixlab/expr.hpp"
#include "helixlab/vec3.hpp"

namespace helixlab {

enum class CurveKind { Analytic, Intrinsic };

/// A curve description: either three coordinate expressions in t, or
/// intrinsic data kappa(s), tau(s) with a start point and start frame.
/// Intrinsic curves are arc-length parametrized by construction; analytic
/// curves carry a general parameter.
struct CurveSpec {
    CurveKind kind = CurveKind::Analytic;

    // analytic: expressions in t
    ExprAst x, y, z;

    // intrinsic: expressions in s, plus initial data and the RK4 step
    ExprAst kappa, tau;
    Vec3 p0{0.0, 0.0, 0.0};
    Vec3 T0{1.0, 0.0, 0.0};
    Vec3 N0{0.0, 1.0, 0.0};
    Vec3 B0{0.0, 0.0, 1.0};  // always T0 x N0
    double step = 1e-3;

    double t0 = 0.0;  // parameter domain; [s0, s1] for intrinsic curves
    double t1 = 1.0;

    bool analytic() const { return kind == CurveKind::Analytic; }
};

/// Check domain ordering, expression presence, step positivity, and start
/// frame orthonormality (within 1e-12, right-handed). Throws SpecError.
void validate(const CurveSpec& spec);

/// Position and its first four parameter-derivatives at one point.
struct CurveJet {
    Vec3 p, d1, d2, d3, d4;
};

/// Componentwise expression jets assembled into vectors. Analytic specs only.
CurveJet eval_curve(const CurveSpec& spec, double t);

/// Raw per-component jets at t; eval_curve repackaged for callers that need
/// jet arithmetic on derived scalars.
void eval_curve_jets(const CurveSpec& spec, double t, Jet4& jx, Jet4& jy, Jet4& jz);

/// Arc length of an analytic curve over [a, b] <= the domain, by adaptive
/// Simpson quadrature with absolute tolerance tol. Throws NumericError if the
/// recursion exceeds the depth limit (50) before reaching tol.
double arc_length(const CurveSpec& spec, double a, double b, double tol = 1e-10);

struct Frame {
    Vec3 T, N, B;
};

/// Project a frame back onto the orthonormal right-handed manifold:
/// normalize T, orthogonalize-then-normalize N, set B = T x N.
Frame orthonormalize(const Frame& f);

struct SampledCurve {
    std::vector<double> params;  // strictly increasing
    std::vector<Vec3> points;
    std::vector<Frame> frames;
    std::vector<double> kappas;
    std::vector<double> taus;

    std::size_t size() const { return params.size(); }
};

/// Integrate the Frenet system
///   p' = T,  T' = kappa N,  N' = -kappa T + tau B,  B' = -tau N
/// with classical RK4 at the spec's step over [s0, s1], re-orthonormalizing
/// the frame after every step. kappa must stay positive at every grid point;
/// a violation reports the offending s.
SampledCurve synthesize(const CurveSpec& spec);

/// Same integrator, but landing exactly on the given strictly increasing
/// sample points (the first must be s0); substeps never exceed the spec step.
SampledCurve synthesize_at(const CurveSpec& spec, const std::vector<double>& params);

/// Worst frame defect over the samples: deviation of T, N, B from unit
/// length, pairwise orthogonality residuals, and the handedness defect
/// |det - 1| of the normalized frame.
double frame_drift(const SampledCurve& samples);

struct RecoveredIntrinsics {
    std::vector<double> s;      // interior sample positions
    std::vector<double> kappa;  // <T', N> with T' by finite differences of the frames
    std::vector<double> tau;    // -<B', N>
};

/// Re-derive kappa and tau from a synthesized curve's frames alone, with no
/// recourse to the defining expressions. Round-trip diagnostic for synthesize.
RecoveredIntrinsics recover_intrinsics(const SampledCurve& samples);

}  // namespace helixlab
