#pragma once

#include <functional>
#include <vector>

#include "isokit/core.hpp"
#include "isokit/quadrature.hpp"

namespace isokit {

/// Position of a plane curve and its first two parameter derivatives.
struct CurveJet {
    double x = 0.0, z = 0.0;
    double dx = 0.0, dz = 0.0;
    double ddx = 0.0, ddz = 0.0;
};

/// Height function z(t) with two derivatives, used for graphs (t, z(t)) and
/// for surface profiles (t, 0, z(t)).
struct ProfileJet {
    double z = 0.0, dz = 0.0, ddz = 0.0;
};
using Profile = std::function<ProfileJet(double)>;

inline constexpr double kAdmissibilityThreshold = 1e-9;

/// Admissible curve of I2: the tangent is never isotropic. Construction
/// checks |x'| on a sampling grid and, if x' < 0 throughout, reverses the
/// parameter so that x' > 0 afterwards.
class PlaneCurve {
public:
    using Evaluator = std::function<CurveJet(double)>;

    PlaneCurve(double t_lo, double t_hi, Evaluator eval);

    /// Graph (t, z(t)) over [t_lo, t_hi].
    static PlaneCurve graph(Profile profile, double t_lo, double t_hi);

    /// Sampled curve; derivatives come from the quadratic through the three
    /// nodes around the nearest interior node (centered differences at nodes).
    static PlaneCurve from_samples(std::vector<double> t, std::vector<double> x,
                                   std::vector<double> z);

    CurveJet operator()(double t) const;

    double t_lo() const noexcept { return t_lo_; }
    double t_hi() const noexcept { return t_hi_; }
    bool reversed() const noexcept { return reversed_; }

private:
    double t_lo_;
    double t_hi_;
    bool reversed_ = false;
    Evaluator eval_;
};

IsoVec2 unit_tangent(const PlaneCurve& curve, double t);

/// Simply isotropic curvature (x' z'' - x'' z') / x'^3.
double curvature(const PlaneCurve& curve, double t);

/// N_min = (-z'/x', 1).
IsoVec2 minimal_normal(const PlaneCurve& curve, double t);

/// N_par = (-z'/x', 1/2 - z'^2/(2 x'^2)), the relative normal induced by the
/// parabolic unit circle.
IsoVec2 parabolic_normal(const PlaneCurve& curve, double t);

/// Integral of x'/2 + z'^2/(2 x') over [a, b].
double relative_arclength(const PlaneCurve& curve, double a, double b,
                          int panels = kDefaultCurvePanels);

enum class LineReference { Lz, Lx };

/// Closed-form critical curves of the weight functionals measured from L_z:
/// alpha = 1 gives (t, c ln(t - lambda) + d), alpha not in {0, 1} gives
/// (t, c t^(1-alpha) + d) with lambda = 0. The L_x family has no closed form
/// and lives in the ODE module.
struct CatenaryFamily {
    LineReference reference = LineReference::Lz;
    double alpha = 1.0;
    double c = 1.0;
    double d = 0.0;
    double lambda = 0.0;
};

IsoVec2 eval_catenary(const CatenaryFamily& family, double t);

/// Height profile of the family with analytic derivatives.
Profile catenary_profile(const CatenaryFamily& family);

PlaneCurve catenary_curve(const CatenaryFamily& family, double t_lo, double t_hi);

/// kappa minus the right-hand side of the curvature characterization of
/// alpha-catenaries w.r.t. L_z (distance <gamma, X>) or L_x (distance
/// <<gamma, Z>>).
double catenary_curvature_residual(const PlaneCurve& curve, LineReference reference,
                                   double alpha, double lambda, double t);

}  // namespace isokit
