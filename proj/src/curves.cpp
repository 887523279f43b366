#include "isokit/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "detail.hpp"
#include "isokit/error.hpp"

namespace isokit {

namespace {

constexpr int kAdmissibilitySamples = 129;

double checked_dx(const PlaneCurve& curve, double t)
{
    if (t < curve.t_lo() || t > curve.t_hi()) {
        fail(ErrorCode::DomainError, "parameter " + std::to_string(t) + " outside curve domain");
    }
    double dx = curve(t).dx;
    if (!(std::abs(dx) >= kAdmissibilityThreshold)) {
        fail(ErrorCode::NonAdmissible, "isotropic tangent at t=" + std::to_string(t));
    }
    return dx;
}

// Value, first and second derivative at t of the quadratic through three nodes.
CurveJet quadratic_jet(double t, const double* ts, const double* xs, const double* zs)
{
    const double t0 = ts[0], t1 = ts[1], t2 = ts[2];
    // Lagrange basis and its derivatives.
    const double d0 = (t0 - t1) * (t0 - t2);
    const double d1 = (t1 - t0) * (t1 - t2);
    const double d2 = (t2 - t0) * (t2 - t1);
    const double l0 = (t - t1) * (t - t2) / d0;
    const double l1 = (t - t0) * (t - t2) / d1;
    const double l2 = (t - t0) * (t - t1) / d2;
    const double dl0 = (2.0 * t - t1 - t2) / d0;
    const double dl1 = (2.0 * t - t0 - t2) / d1;
    const double dl2 = (2.0 * t - t0 - t1) / d2;
    const double ddl0 = 2.0 / d0, ddl1 = 2.0 / d1, ddl2 = 2.0 / d2;
    CurveJet j;
    j.x = l0 * xs[0] + l1 * xs[1] + l2 * xs[2];
    j.z = l0 * zs[0] + l1 * zs[1] + l2 * zs[2];
    j.dx = dl0 * xs[0] + dl1 * xs[1] + dl2 * xs[2];
    j.dz = dl0 * zs[0] + dl1 * zs[1] + dl2 * zs[2];
    j.ddx = ddl0 * xs[0] + ddl1 * xs[1] + ddl2 * xs[2];
    j.ddz = ddl0 * zs[0] + ddl1 * zs[1] + ddl2 * zs[2];
    return j;
}

}  // namespace

PlaneCurve::PlaneCurve(double t_lo, double t_hi, Evaluator eval)
    : t_lo_(t_lo), t_hi_(t_hi), eval_(std::move(eval))
{
    if (!(t_lo < t_hi)) fail(ErrorCode::InvalidInterval, "curve domain must satisfy t_lo < t_hi");
    bool any_positive = false;
    bool any_negative = false;
    for (int i = 0; i < kAdmissibilitySamples; ++i) {
        double t = t_lo + (t_hi - t_lo) * i / (kAdmissibilitySamples - 1);
        double dx = eval_(t).dx;
        if (!(std::abs(dx) >= kAdmissibilityThreshold)) {
            fail(ErrorCode::NonAdmissible, "isotropic tangent at t=" + std::to_string(t));
        }
        (dx > 0 ? any_positive : any_negative) = true;
    }
    if (any_positive && any_negative) {
        fail(ErrorCode::NonAdmissible, "x' changes sign on the domain");
    }
    if (any_negative) {
        reversed_ = true;
        Evaluator original = std::move(eval_);
        const double flip = t_lo + t_hi;
        eval_ = [original, flip](double s) {
            CurveJet j = original(flip - s);
            j.dx = -j.dx;
            j.dz = -j.dz;
            return j;
        };
    }
}

PlaneCurve PlaneCurve::graph(Profile profile, double t_lo, double t_hi)
{
    return PlaneCurve(t_lo, t_hi, [profile = std::move(profile)](double t) {
        ProfileJet p = profile(t);
        return CurveJet{t, p.z, 1.0, p.dz, 0.0, p.ddz};
    });
}

PlaneCurve PlaneCurve::from_samples(std::vector<double> t, std::vector<double> x,
                                    std::vector<double> z)
{
    if (t.size() < 3 || x.size() != t.size() || z.size() != t.size()) {
        fail(ErrorCode::InvalidInterval, "sampled curve needs >= 3 nodes of matching size");
    }
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (!(t[i] > t[i - 1])) fail(ErrorCode::InvalidInterval, "sample grid must be strictly increasing");
    }
    const double lo = t.front();
    const double hi = t.back();
    auto eval = [t = std::move(t), x = std::move(x), z = std::move(z)](double s) {
        auto it = std::lower_bound(t.begin(), t.end(), s);
        std::size_t k = static_cast<std::size_t>(it - t.begin());
        if (k > 0 && (k == t.size() || s - t[k - 1] < t[k] - s)) --k;
        k = std::clamp<std::size_t>(k, 1, t.size() - 2);
        return quadratic_jet(s, &t[k - 1], &x[k - 1], &z[k - 1]);
    };
    return PlaneCurve(lo, hi, std::move(eval));
}

CurveJet PlaneCurve::operator()(double t) const { return eval_(t); }

IsoVec2 unit_tangent(const PlaneCurve& curve, double t)
{
    double dx = checked_dx(curve, t);
    return {dx > 0 ? 1.0 : -1.0, curve(t).dz / dx};
}

double curvature(const PlaneCurve& curve, double t)
{
    double dx = checked_dx(curve, t);
    CurveJet j = curve(t);
    return (dx * j.ddz - j.ddx * j.dz) / (dx * dx * dx);
}

IsoVec2 minimal_normal(const PlaneCurve& curve, double t)
{
    double dx = checked_dx(curve, t);
    return {-curve(t).dz / dx, 1.0};
}

IsoVec2 parabolic_normal(const PlaneCurve& curve, double t)
{
    double dx = checked_dx(curve, t);
    double slope = curve(t).dz / dx;
    return {-slope, 0.5 - 0.5 * slope * slope};
}

double relative_arclength(const PlaneCurve& curve, double a, double b, int panels)
{
    if (!(a < b)) fail(ErrorCode::InvalidInterval, "relative_arclength requires a < b");
    checked_dx(curve, a);
    checked_dx(curve, b);
    return simpson(
        [&](double t) {
            CurveJet j = curve(t);
            if (!(std::abs(j.dx) >= kAdmissibilityThreshold)) {
                fail(ErrorCode::NonAdmissible, "isotropic tangent at t=" + std::to_string(t));
            }
            return 0.5 * j.dx + 0.5 * j.dz * j.dz / j.dx;
        },
        a, b, panels);
}

namespace {

void validate_family(const CatenaryFamily& f)
{
    if (f.reference != LineReference::Lz) {
        fail(ErrorCode::InvalidSpec, "L_x alpha-catenaries have no closed form; integrate the profile ODE");
    }
    if (f.alpha == 0.0) {
        fail(ErrorCode::InvalidSpec, "alpha = 0 is degenerate; use the variational module");
    }
    if (f.alpha != 1.0 && f.lambda != 0.0) {
        fail(ErrorCode::InvalidSpec, "the closed form for alpha != 1 requires lambda = 0");
    }
}

ProfileJet family_jet(const CatenaryFamily& f, double t)
{
    if (f.alpha == 1.0) {
        double s = t - f.lambda;
        if (!(s > 0.0)) fail(ErrorCode::DomainError, "catenary requires t > lambda");
        return {f.c * std::log(s) + f.d, f.c / s, -f.c / (s * s)};
    }
    if (!(t > 0.0)) fail(ErrorCode::DomainError, "alpha-catenary requires t > 0");
    double e = 1.0 - f.alpha;
    return {f.c * std::pow(t, e) + f.d, f.c * e * std::pow(t, e - 1.0),
            f.c * e * (e - 1.0) * std::pow(t, e - 2.0)};
}

}  // namespace

IsoVec2 eval_catenary(const CatenaryFamily& family, double t)
{
    validate_family(family);
    return {t, family_jet(family, t).z};
}

Profile catenary_profile(const CatenaryFamily& family)
{
    validate_family(family);
    return [family](double t) { return family_jet(family, t); };
}

PlaneCurve catenary_curve(const CatenaryFamily& family, double t_lo, double t_hi)
{
    return PlaneCurve::graph(catenary_profile(family), t_lo, t_hi);
}

double catenary_curvature_residual(const PlaneCurve& curve, LineReference reference,
                                   double alpha, double lambda, double t)
{
    const double kappa = curvature(curve, t);
    const CurveJet j = curve(t);
    const IsoVec2 npar = parabolic_normal(curve, t);
    const IsoVec2 position{j.x, j.z};
    double distance = 0.0;
    double normal_component = 0.0;
    if (reference == LineReference::Lz) {
        distance = iso_dot(position, IsoVec2{1.0, 0.0});
        normal_component = iso_dot(npar, IsoVec2{1.0, 0.0});
    } else {
        distance = sec_dot(position, IsoVec2{0.0, 1.0});
        normal_component = sec_dot(npar, IsoVec2{0.0, 1.0});
    }
    const double denominator = detail::real_power(distance, alpha) - lambda;
    detail::require_nonsingular(denominator, "catenary weight");
    const double rhs = alpha * detail::real_power(distance, alpha - 1.0) * normal_component / denominator;
    return kappa - rhs;
}

}  // namespace isokit
