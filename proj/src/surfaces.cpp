#include "isokit/surfaces.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "isokit/error.hpp"

namespace isokit {

namespace {

constexpr int kAdmissibilityGrid = 17;

double checked_x12(const ParamSurface& s, double u, double v)
{
    const TangentMinors m = tangent_minors(s, u, v);
    if (!(std::abs(m.x12) >= kAdmissibilityThreshold)) {
        fail(ErrorCode::NonAdmissible,
             "isotropic tangent plane at (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    return m.x12;
}

}  // namespace

ParamSurface::ParamSurface(ParamRect domain, Evaluator eval) : domain_(domain), eval_(std::move(eval))
{
    if (!(domain.u_lo < domain.u_hi) || !(domain.v_lo < domain.v_hi)) {
        fail(ErrorCode::InvalidInterval, "surface domain must be a non-empty rectangle");
    }
    bool any_positive = false;
    bool any_negative = false;
    for (int i = 0; i < kAdmissibilityGrid; ++i) {
        for (int j = 0; j < kAdmissibilityGrid; ++j) {
            const double u = domain.u_lo + (domain.u_hi - domain.u_lo) * i / (kAdmissibilityGrid - 1);
            const double v = domain.v_lo + (domain.v_hi - domain.v_lo) * j / (kAdmissibilityGrid - 1);
            const SurfaceJet s = eval_(u, v);
            const double x12 = s.ru.x * s.rv.y - s.ru.y * s.rv.x;
            if (!(std::abs(x12) >= kAdmissibilityThreshold)) {
                fail(ErrorCode::NonAdmissible, "isotropic tangent plane at (" + std::to_string(u) + ", " +
                                                   std::to_string(v) + ")");
            }
            (x12 > 0 ? any_positive : any_negative) = true;
        }
    }
    if (any_positive && any_negative) fail(ErrorCode::NonAdmissible, "X12 changes sign on the domain");
    if (any_negative) {
        swapped_ = true;
        domain_ = {domain.v_lo, domain.v_hi, domain.u_lo, domain.u_hi};
        Evaluator original = std::move(eval_);
        eval_ = [original](double u, double v) {
            SurfaceJet s = original(v, u);
            std::swap(s.ru, s.rv);
            std::swap(s.ruu, s.rvv);
            return s;
        };
    }
}

ParamSurface ParamSurface::graph(std::function<GraphJet(double, double)> f, ParamRect domain)
{
    return ParamSurface(domain, [f = std::move(f)](double u, double v) {
        const GraphJet g = f(u, v);
        return SurfaceJet{{u, v, g.f},          {1.0, 0.0, g.fu},   {0.0, 1.0, g.fv},
                          {0.0, 0.0, g.fuu},    {0.0, 0.0, g.fuv},  {0.0, 0.0, g.fvv}};
    });
}

SurfaceJet ParamSurface::operator()(double u, double v) const { return eval_(u, v); }

TangentMinors tangent_minors(const ParamSurface& surface, double u, double v)
{
    const SurfaceJet s = surface(u, v);
    const IsoVec3 n = euclid_cross(s.ru, s.rv);
    return {n.x, n.y, n.z};
}

FundamentalForms fundamental_forms(const ParamSurface& surface, double u, double v)
{
    const double x12 = checked_x12(surface, u, v);
    const SurfaceJet s = surface(u, v);
    FundamentalForms f;
    f.g11 = iso_dot(s.ru, s.ru);
    f.g12 = iso_dot(s.ru, s.rv);
    f.g22 = iso_dot(s.rv, s.rv);
    // sqrt(det g) = |X12|.
    const double area = std::abs(x12);
    f.h11 = det(s.ru, s.rv, s.ruu) / area;
    f.h12 = det(s.ru, s.rv, s.ruv) / area;
    f.h22 = det(s.ru, s.rv, s.rvv) / area;
    return f;
}

double mean_curvature(const ParamSurface& surface, double u, double v)
{
    const FundamentalForms f = fundamental_forms(surface, u, v);
    return 0.5 * (f.g11 * f.h22 - 2.0 * f.g12 * f.h12 + f.g22 * f.h11) / (f.g11 * f.g22 - f.g12 * f.g12);
}

IsoVec3 surface_minimal_normal(const ParamSurface& surface, double u, double v)
{
    checked_x12(surface, u, v);
    const TangentMinors m = tangent_minors(surface, u, v);
    return {m.x23 / m.x12, m.x31 / m.x12, 1.0};
}

IsoVec3 surface_parabolic_normal(const ParamSurface& surface, double u, double v)
{
    checked_x12(surface, u, v);
    const TangentMinors m = tangent_minors(surface, u, v);
    const double p = m.x23 / m.x12;
    const double q = m.x31 / m.x12;
    return {p, q, 0.5 - 0.5 * (p * p + q * q)};
}

double relative_area(const ParamSurface& surface, const ParamRect& rect, int panels_u, int panels_v)
{
    return simpson2d(
        [&](double u, double v) {
            const SurfaceJet s = surface(u, v);
            return std::abs(det(s.ru, s.rv, surface_parabolic_normal(surface, u, v)));
        },
        rect.u_lo, rect.u_hi, rect.v_lo, rect.v_hi, panels_u, panels_v);
}

ParamSurface make_revolution(const RevolutionSpec& spec)
{
    if (!(spec.t_lo > 0.0)) fail(ErrorCode::InvalidSpec, "revolution profile requires t_lo > 0");
    HelicoidalSpec h{spec.profile, 0.0, spec.t_lo, spec.t_hi, spec.theta_lo, spec.theta_hi};
    return make_helicoidal(h);
}

ParamSurface make_helicoidal(const HelicoidalSpec& spec)
{
    if (!spec.profile) fail(ErrorCode::InvalidSpec, "missing profile");
    if (!(spec.t_lo > 0.0)) fail(ErrorCode::InvalidSpec, "helicoidal profile requires t_lo > 0");
    const double pitch = spec.pitch;
    return ParamSurface({spec.t_lo, spec.t_hi, spec.theta_lo, spec.theta_hi},
                        [profile = spec.profile, pitch](double t, double th) {
                            const ProfileJet p = profile(t);
                            const double c = std::cos(th), s = std::sin(th);
                            SurfaceJet j;
                            j.r = {t * c, t * s, pitch * th + p.z};
                            j.ru = {c, s, p.dz};
                            j.rv = {-t * s, t * c, pitch};
                            j.ruu = {0.0, 0.0, p.ddz};
                            j.ruv = {-s, c, 0.0};
                            j.rvv = {-t * c, -t * s, 0.0};
                            return j;
                        });
}

ParamSurface make_parabolic_revolution(const ParabolicRevolutionSpec& spec)
{
    if (spec.b == 0.0) fail(ErrorCode::InvalidSpec, "parabolic revolution requires b != 0");
    if (!spec.profile) fail(ErrorCode::InvalidSpec, "missing profile");
    const double a = spec.a, b = spec.b, c = spec.c, c1 = spec.c1, c2 = spec.c2;
    const double k = a * c1 + b * c2;
    return ParamSurface({spec.t_lo, spec.t_hi, spec.theta_lo, spec.theta_hi},
                        [=, profile = spec.profile](double t, double th) {
                            const ProfileJet p = profile(t);
                            SurfaceJet j;
                            j.r = {a * th + t, b * th, c * th + 0.5 * k * th * th + c1 * t * th + p.z};
                            j.ru = {1.0, 0.0, c1 * th + p.dz};
                            j.rv = {a, b, c + k * th + c1 * t};
                            j.ruu = {0.0, 0.0, p.ddz};
                            j.ruv = {0.0, 0.0, c1};
                            j.rvv = {0.0, 0.0, k};
                            return j;
                        });
}

double revolution_mean_curvature(const Profile& profile, double t)
{
    if (!(t > 0.0)) fail(ErrorCode::DomainError, "revolution mean curvature requires t > 0");
    const ProfileJet p = profile(t);
    return (p.dz + t * p.ddz) / (2.0 * t);
}

double parabolic_revolution_mean_curvature(const ParabolicRevolutionSpec& spec, double t)
{
    if (spec.b == 0.0) fail(ErrorCode::InvalidSpec, "parabolic revolution requires b != 0");
    const double b2 = spec.b * spec.b;
    return (spec.a * spec.a + b2) / (2.0 * b2) * spec.profile(t).ddz +
           (spec.b * spec.c2 - spec.a * spec.c1) / (2.0 * b2);
}

IsoVec3 parabolic_revolution_normal(const ParabolicRevolutionSpec& spec, double t, double theta)
{
    if (spec.b == 0.0) fail(ErrorCode::InvalidSpec, "parabolic revolution requires b != 0");
    const double dz = spec.profile(t).dz;
    const double n1 = -spec.c1 * theta - dz;
    const double n2 = (spec.a * dz - spec.b * spec.c2 * theta - spec.c - spec.c1 * t) / spec.b;
    return {n1, n2, 0.5 - 0.5 * parabolic_revolution_F(spec, t, theta)};
}

double parabolic_revolution_F(const ParabolicRevolutionSpec& spec, double t, double theta)
{
    if (spec.b == 0.0) fail(ErrorCode::InvalidSpec, "parabolic revolution requires b != 0");
    const double a = spec.a, b = spec.b, c1 = spec.c1, c2 = spec.c2;
    const double dz = spec.profile(t).dz;
    const double e = spec.c + c1 * t;
    const double b2 = b * b;
    return e * e / b2 - 2.0 * a * e * dz / b2 + (a * a + b2) / b2 * dz * dz -
           2.0 * theta / b * ((a * c2 - b * c1) * dz - c2 * e) + theta * theta * (c1 * c1 + c2 * c2);
}

}  // namespace isokit
