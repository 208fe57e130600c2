#include "helixlab/curve.hpp"

#include <cmath>
#include <string>

#include "helixlab/errors.hpp"
#include "helixlab/numerics.hpp"

namespace helixlab {

namespace {

constexpr double kFrameTol = 1e-12;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check_domain(const CurveSpec& spec, double t) {
    const double slack = 1e-12 * (spec.t1 - spec.t0);
    if (t < spec.t0 - slack || t > spec.t1 + slack)
        throw NumericError("parameter " + num(t) + " outside domain [" + num(spec.t0) + ", " +
                           num(spec.t1) + "]");
}

double curve_speed(const CurveSpec& spec, double t) {
    const double dx = spec.x.eval_jet(t).d1;
    const double dy = spec.y.eval_jet(t).d1;
    const double dz = spec.z.eval_jet(t).d1;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double adaptive_simpson(const CurveSpec& spec, double a, double fa, double b, double fb, double m,
                        double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = curve_speed(spec, lm);
    const double frm = curve_speed(spec, rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0)
        throw NumericError("arc-length quadrature did not converge over [" + num(a) + ", " +
                           num(b) + "]; achieved error estimate " + num(std::fabs(delta) / 15.0));
    return adaptive_simpson(spec, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(spec, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

struct FrenetState {
    Vec3 p, T, N, B;
};

FrenetState operator+(const FrenetState& a, const FrenetState& b) {
    return {a.p + b.p, a.T + b.T, a.N + b.N, a.B + b.B};
}

FrenetState operator*(double c, const FrenetState& a) {
    return {c * a.p, c * a.T, c * a.N, c * a.B};
}

FrenetState frenet_rhs(const CurveSpec& spec, double s, const FrenetState& y) {
    const double k = spec.kappa.eval_value(s);
    const double ta = spec.tau.eval_value(s);
    return {y.T, k * y.N, -k * y.T + ta * y.B, -ta * y.N};
}

void rk4_step(const CurveSpec& spec, double s, double h, FrenetState& y) {
    const FrenetState k1 = frenet_rhs(spec, s, y);
    const FrenetState k2 = frenet_rhs(spec, s + 0.5 * h, y + 0.5 * h * k1);
    const FrenetState k3 = frenet_rhs(spec, s + 0.5 * h, y + 0.5 * h * k2);
    const FrenetState k4 = frenet_rhs(spec, s + h, y + h * k3);
    y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const Frame f = orthonormalize({y.T, y.N, y.B});
    y.T = f.T;
    y.N = f.N;
    y.B = f.B;
}

double kappa_checked(const CurveSpec& spec, double s) {
    const double k = spec.kappa.eval_value(s);
    if (k <= 0.0)
        throw NumericError("kappa(s) = " + num(k) + " is not positive at s = " + num(s) +
                           "; intrinsic curves require kappa > 0 on the grid");
    return k;
}

}  // namespace

void validate(const CurveSpec& spec) {
    if (!(spec.t0 < spec.t1))
        throw SpecError("domain start " + num(spec.t0) + " must be below domain end " +
                        num(spec.t1));
    if (spec.analytic()) {
        if (!spec.x.valid() || !spec.y.valid() || !spec.z.valid())
            throw SpecError("analytic spec is missing a coordinate expression");
        return;
    }
    if (!spec.kappa.valid() || !spec.tau.valid())
        throw SpecError("intrinsic spec is missing a kappa or tau expression");
    if (!(spec.step > 0.0)) throw SpecError("step must be positive, got " + num(spec.step));
    if (std::fabs(norm(spec.T0) - 1.0) > kFrameTol || std::fabs(norm(spec.N0) - 1.0) > kFrameTol ||
        std::fabs(dot(spec.T0, spec.N0)) > kFrameTol)
        throw SpecError("start frame (T0, N0) is not orthonormal within 1e-12");
    if (norm(spec.B0 - cross(spec.T0, spec.N0)) > kFrameTol)
        throw SpecError("B0 must equal T0 x N0");
}

CurveJet eval_curve(const CurveSpec& spec, double t) {
    Jet4 jx, jy, jz;
    eval_curve_jets(spec, t, jx, jy, jz);
    CurveJet out;
    out.p = {jx.d0, jy.d0, jz.d0};
    out.d1 = {jx.d1, jy.d1, jz.d1};
    out.d2 = {jx.d2, jy.d2, jz.d2};
    out.d3 = {jx.d3, jy.d3, jz.d3};
    out.d4 = {jx.d4, jy.d4, jz.d4};
    return out;
}

void eval_curve_jets(const CurveSpec& spec, double t, Jet4& jx, Jet4& jy, Jet4& jz) {
    if (!spec.analytic()) throw SpecError("eval_curve needs an analytic spec");
    check_domain(spec, t);
    jx = spec.x.eval_jet(t);
    jy = spec.y.eval_jet(t);
    jz = spec.z.eval_jet(t);
}

double arc_length(const CurveSpec& spec, double a, double b, double tol) {
    if (!spec.analytic()) throw SpecError("arc_length needs an analytic spec");
    if (!(tol > 0.0)) throw SpecError("quadrature tolerance must be positive");
    if (a > b) throw NumericError("arc_length needs a <= b");
    check_domain(spec, a);
    check_domain(spec, b);
    if (a == b) return 0.0;
    const double fa = curve_speed(spec, a);
    const double fb = curve_speed(spec, b);
    const double m = 0.5 * (a + b);
    const double fm = curve_speed(spec, m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(spec, a, fa, b, fb, m, fm, whole, tol, 50);
}

Frame orthonormalize(const Frame& f) {
    Frame out;
    out.T = normalized(f.T);
    out.N = normalized(f.N - dot(f.N, out.T) * out.T);
    out.B = cross(out.T, out.N);
    return out;
}

SampledCurve synthesize(const CurveSpec& spec) {
    if (spec.analytic()) throw SpecError("synthesize needs an intrinsic spec");
    validate(spec);
    const double span = spec.t1 - spec.t0;
    auto n_full = static_cast<long long>(std::floor(span / spec.step + 1e-9));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n_full) + 2);
    grid.push_back(spec.t0);
    for (long long i = 1; i <= n_full; ++i) grid.push_back(spec.t0 + double(i) * spec.step);
    if (grid.back() < spec.t1 - 1e-12 * span) grid.push_back(spec.t1);
    grid.back() = spec.t1;
    return synthesize_at(spec, grid);
}

SampledCurve synthesize_at(const CurveSpec& spec, const std::vector<double>& params) {
    if (spec.analytic()) throw SpecError("synthesize needs an intrinsic spec");
    validate(spec);
    if (params.empty() || params.front() != spec.t0)
        throw SpecError("sample grid must start at the domain start");
    for (std::size_t i = 1; i < params.size(); ++i)
        if (!(params[i] > params[i - 1])) throw SpecError("sample grid must be increasing");
    if (params.back() > spec.t1 + 1e-12 * (spec.t1 - spec.t0))
        throw SpecError("sample grid exceeds the domain");

    SampledCurve out;
    out.params = params;
    out.points.reserve(params.size());
    out.frames.reserve(params.size());
    out.kappas.reserve(params.size());
    out.taus.reserve(params.size());

    FrenetState y{spec.p0, spec.T0, spec.N0, spec.B0};
    {
        const Frame f = orthonormalize({y.T, y.N, y.B});
        y.T = f.T;
        y.N = f.N;
        y.B = f.B;
    }

    auto record = [&](double s) {
        out.points.push_back(y.p);
        out.frames.push_back({y.T, y.N, y.B});
        out.kappas.push_back(kappa_checked(spec, s));
        out.taus.push_back(spec.tau.eval_value(s));
    };

    record(params.front());
    for (std::size_t i = 1; i < params.size(); ++i) {
        const double a = params[i - 1];
        const double b = params[i];
        const auto substeps =
            static_cast<long long>(std::ceil((b - a) / spec.step - 1e-9));
        const long long m = substeps < 1 ? 1 : substeps;
        const double h = (b - a) / double(m);
        double s = a;
        for (long long j = 0; j < m; ++j) {
            rk4_step(spec, s, h, y);
            s = a + double(j + 1) * h;
        }
        record(b);
    }
    return out;
}

double frame_drift(const SampledCurve& samples) {
    double worst = 0.0;
    for (const Frame& f : samples.frames) {
        const double defects[] = {
            std::fabs(norm(f.T) - 1.0),
            std::fabs(norm(f.N) - 1.0),
            std::fabs(norm(f.B) - 1.0),
            std::fabs(dot(f.T, f.N)),
            std::fabs(dot(f.T, f.B)),
            std::fabs(dot(f.N, f.B)),
            // handedness on the normalized frame, so uniform scaling does not
            // cube into the determinant term
            std::fabs(dot(cross(normalized(f.T), normalized(f.N)), normalized(f.B)) - 1.0),
        };
        for (double d : defects) worst = std::max(worst, d);
    }
    return worst;
}

RecoveredIntrinsics recover_intrinsics(const SampledCurve& samples) {
    if (samples.size() < 3 || samples.frames.size() != samples.size())
        throw NumericError("recover_intrinsics needs at least 3 samples with frames");
    RecoveredIntrinsics out;
    out.s.reserve(samples.size() - 2);
    out.kappa.reserve(samples.size() - 2);
    out.tau.reserve(samples.size() - 2);
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        const double sa = samples.params[i - 1];
        const double sb = samples.params[i];
        const double sc = samples.params[i + 1];
        const Vec3 Tp = quad_derivative(sa, samples.frames[i - 1].T, sb, samples.frames[i].T, sc,
                                        samples.frames[i + 1].T, sb);
        const Vec3 Bp = quad_derivative(sa, samples.frames[i - 1].B, sb, samples.frames[i].B, sc,
                                        samples.frames[i + 1].B, sb);
        out.s.push_back(sb);
        out.kappa.push_back(dot(Tp, samples.frames[i].N));
        out.tau.push_back(-dot(Bp, samples.frames[i].N));
    }
    return out;
}

}  // namespace helixlab
