#pragma once

#include <functional>

#include "isokit/core.hpp"
#include "isokit/curves.hpp"
#include "isokit/quadrature.hpp"

namespace isokit {

/// Position and partial derivatives up to second order.
struct SurfaceJet {
    IsoVec3 r, ru, rv, ruu, ruv, rvv;
};

struct ParamRect {
    double u_lo = 0.0, u_hi = 1.0;
    double v_lo = 0.0, v_hi = 1.0;
};

/// Admissible parametrized surface in I3: the top view of the tangent plane
/// never degenerates (X12 != 0). Construction samples X12 on a grid; when it
/// is negative throughout, u and v are exchanged so that X12 > 0.
class ParamSurface {
public:
    using Evaluator = std::function<SurfaceJet(double, double)>;

    ParamSurface(ParamRect domain, Evaluator eval);

    /// Normal form r = (u, v, f(u, v)); f returns {f, f_u, f_v, f_uu, f_uv, f_vv}.
    struct GraphJet {
        double f, fu, fv, fuu, fuv, fvv;
    };
    static ParamSurface graph(std::function<GraphJet(double, double)> f, ParamRect domain);

    SurfaceJet operator()(double u, double v) const;

    const ParamRect& domain() const noexcept { return domain_; }
    bool swapped() const noexcept { return swapped_; }

private:
    ParamRect domain_;
    bool swapped_ = false;
    Evaluator eval_;
};

struct FundamentalForms {
    double g11, g12, g22;
    double h11, h12, h22;
};

/// Top-view minors X_ij of the tangent vectors: (X23, X31, X12) = r_u x r_v.
struct TangentMinors {
    double x23, x31, x12;
};

TangentMinors tangent_minors(const ParamSurface& surface, double u, double v);

/// g_ij = <r_i, r_j> and h_ij = det(r_1, r_2, r_ij) / sqrt(det g).
FundamentalForms fundamental_forms(const ParamSurface& surface, double u, double v);

double mean_curvature(const ParamSurface& surface, double u, double v);

/// N_min = (X23/X12, X31/X12, 1).
IsoVec3 surface_minimal_normal(const ParamSurface& surface, double u, double v);

/// N_par = (X23/X12, X31/X12, 1/2 - (X23^2 + X31^2)/(2 X12^2)).
IsoVec3 surface_parabolic_normal(const ParamSurface& surface, double u, double v);

/// int |det(r_u, r_v, N_par)| du dv over the sub-rectangle.
double relative_area(const ParamSurface& surface, const ParamRect& rect,
                     int panels_u = kDefaultSurfacePanels, int panels_v = kDefaultSurfacePanels);

/// Surface of Euclidean revolution r(t, th) = (t cos th, t sin th, z(t)).
struct RevolutionSpec {
    Profile profile;
    double t_lo = 1.0, t_hi = 2.0;
    double theta_lo = 0.0, theta_hi = 6.283185307179586;
};

/// Helicoidal surface r(t, th) = (t cos th, t sin th, c th + z(t)).
struct HelicoidalSpec {
    Profile profile;
    double pitch = 0.0;
    double t_lo = 1.0, t_hi = 2.0;
    double theta_lo = 0.0, theta_hi = 6.283185307179586;
};

/// Surface of parabolic revolution
/// r(t, th) = (a th + t, b th, c th + (a c1 + b c2) th^2 / 2 + c1 t th + z(t)).
struct ParabolicRevolutionSpec {
    double a = 0.0, b = 1.0, c = 0.0, c1 = 0.0, c2 = 0.0;
    Profile profile;
    double t_lo = 1.0, t_hi = 2.0;
    double theta_lo = -1.0, theta_hi = 1.0;

    /// a c1 + b c2 = 0: the surface is a warped translation surface.
    bool warped_translation() const { return a * c1 + b * c2 == 0.0; }
};

ParamSurface make_revolution(const RevolutionSpec& spec);
ParamSurface make_helicoidal(const HelicoidalSpec& spec);
ParamSurface make_parabolic_revolution(const ParabolicRevolutionSpec& spec);

/// (z' + t z'') / (2t) for revolution and helicoidal surfaces.
double revolution_mean_curvature(const Profile& profile, double t);

/// (a^2 + b^2)/(2 b^2) z'' + (b c2 - a c1)/(2 b^2).
double parabolic_revolution_mean_curvature(const ParabolicRevolutionSpec& spec, double t);

/// F = (X23^2 + X31^2)/X12^2 along the parabolic revolution surface, so that
/// the third component of N_par is (1 - F)/2. Depends on the orbit parameter.
double parabolic_revolution_F(const ParabolicRevolutionSpec& spec, double t, double theta);

/// Closed-form parabolic normal of the parabolic revolution surface.
IsoVec3 parabolic_revolution_normal(const ParabolicRevolutionSpec& spec, double t, double theta);

}  // namespace isokit
