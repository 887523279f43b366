#include "isokit/singular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "detail.hpp"
#include "isokit/error.hpp"

namespace isokit {

double sms_residual(const ParamSurface& surface, const SingularSpec& spec, double u, double v)
{
    const double h = mean_curvature(surface, u, v);
    const IsoVec3 npar = surface_parabolic_normal(surface, u, v);
    const IsoVec3 r = surface(u, v).r;
    double distance = 0.0;
    double component = 0.0;
    if (spec.reference == PlaneReference::Pi_yz) {
        distance = r.x;
        component = iso_dot(npar, IsoVec3{1.0, 0.0, 0.0});
    } else {
        distance = sec_dot(r, IsoVec3{0.0, 0.0, 1.0});
        component = sec_dot(npar, IsoVec3{0.0, 0.0, 1.0});
    }
    if (!(distance > 0.0)) {
        fail(ErrorCode::SingularDenominator, "surface point outside the positive half-space (distance " +
                                                 std::to_string(distance) + ")");
    }
    detail::require_nonsingular(distance - spec.lambda, "distance minus lambda");
    return h - spec.alpha * component / (2.0 * (distance - spec.lambda));
}

CatenoidSolution solve_catenoid_boundary(const CatenoidBoundary& b)
{
    if (!(b.r1 > 0.0) || !(b.r2 > 0.0)) fail(ErrorCode::InvalidRadius, "circle radii must be positive");
    if (b.r1 == b.r2) {
        if (b.z1 == b.z2) return {CatenoidStatus::Degenerate, 0.0, b.z1};
        return {CatenoidStatus::NoSolution, 0.0, 0.0};
    }
    const double c = (b.z2 - b.z1) / std::log(b.r2 / b.r1);
    return {CatenoidStatus::Unique, c, b.z1 - c * std::log(b.r1)};
}

std::string to_string(ClassificationCase c)
{
    switch (c) {
    case ClassificationCase::HorizontalPlane: return "HorizontalPlane";
    case ClassificationCase::EuclideanRevolutionInverse: return "EuclideanRevolutionInverse";
    case ClassificationCase::NonIsotropicODE: return "NonIsotropicODE";
    case ClassificationCase::ParabolicCase1a: return "ParabolicCase1a";
    case ClassificationCase::ParabolicCase1b: return "ParabolicCase1b";
    case ClassificationCase::ParabolicNonIsotropic: return "ParabolicNonIsotropic";
    case ClassificationCase::NoHelicoidal: return "NoHelicoidal";
    case ClassificationCase::NoSolution: return "NoSolution";
    }
    return "Unknown";
}

Profile ClosedFormProfile::profile() const
{
    return [q = quadratic, l = log_coeff, inv = inverse, k = constant](double t) {
        ProfileJet p;
        p.z = q * t * t + k;
        p.dz = 2.0 * q * t;
        p.ddz = 2.0 * q;
        if (l != 0.0) {
            p.z += l * std::log(t);
            p.dz += l / t;
            p.ddz -= l / (t * t);
        }
        if (inv != 0.0) {
            p.z += inv / t;
            p.dz -= inv / (t * t);
            p.ddz += 2.0 * inv / (t * t * t);
        }
        return p;
    };
}

namespace {

constexpr int kGridT = 50;
constexpr int kGridTheta = 16;

double grid_point(double lo, double hi, int i, int n) { return lo + (hi - lo) * i / (n - 1); }

double max_sms_residual(const ParamSurface& surface, const SingularSpec& spec, ParamRect rect)
{
    double worst = 0.0;
    for (int i = 0; i < kGridT; ++i) {
        for (int j = 0; j < kGridTheta; ++j) {
            const double u = grid_point(rect.u_lo, rect.u_hi, i, kGridT);
            const double v = grid_point(rect.v_lo, rect.v_hi, j, kGridTheta);
            worst = std::max(worst, std::abs(sms_residual(surface, spec, u, v)));
        }
    }
    return worst;
}

template <class F>
double max_over_t(double lo, double hi, F&& f)
{
    double worst = 0.0;
    for (int i = 0; i < kGridT; ++i) worst = std::max(worst, std::abs(f(grid_point(lo, hi, i, kGridT))));
    return worst;
}

bool violated(double residual) { return !(std::abs(residual) <= kConstraintTolerance); }

}  // namespace

ClassificationReport classify_helicoidal(double pitch, PlaneReference reference, FamilyConstants k)
{
    ClassificationReport report;
    report.parameters["c"] = pitch;
    if (reference == PlaneReference::Pi_yz) {
        // t (2z' + t z'') cos th - c sin th = 0 for all th.
        report.constraints.push_back({"sin(theta) coefficient: c = 0", pitch});
        if (violated(pitch)) {
            report.kind = ClassificationCase::NoHelicoidal;
            return report;
        }
        report.parameters["z1"] = k.z1;
        report.parameters["z2"] = k.z2;
        ClosedFormProfile profile{"inverse", 0.0, 0.0, k.z2, k.z1};
        const Profile z = profile.profile();
        report.constraints.push_back({"cos(theta) coefficient: 2z' + t z'' = 0", max_over_t(0.5, 2.0, [&](double t) {
                                          const ProfileJet p = z(t);
                                          return 2.0 * p.dz + t * p.ddz;
                                      })});
        report.kind = k.z2 == 0.0 ? ClassificationCase::HorizontalPlane
                                  : ClassificationCase::EuclideanRevolutionInverse;
        const ParamSurface surface = make_revolution({z, 0.5, 2.0, -1.2, 1.2});
        report.verification_residual = max_sms_residual(surface, {PlaneReference::Pi_yz, 1.0, 0.0}, surface.domain());
        report.profile = profile;
        return report;
    }
    // theta-linear part c (z' + t z'') must vanish and the remainder admits no
    // solution unless c = 0.
    report.constraints.push_back({"theta coefficient: c (z' + t z'') = 0 with c = 0", pitch});
    if (violated(pitch)) {
        report.kind = ClassificationCase::NoHelicoidal;
        return report;
    }
    report.kind = ClassificationCase::NonIsotropicODE;
    report.profile = OdeProfileHandle{"z'' + z'/t = (1 - z'^2)/(2 z)", {}};
    return report;
}

ClassificationReport classify_parabolic_revolution(const ParabolicParameters& p, PlaneReference reference,
                                                   FamilyConstants k)
{
    if (p.b == 0.0) fail(ErrorCode::InvalidSpec, "parabolic revolution requires b != 0");
    ClassificationReport report;
    report.parameters = {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"c1", p.c1}, {"c2", p.c2}};

    if (reference == PlaneReference::Pi_xy) {
        report.constraints.push_back({"c = 0", p.c});
        report.constraints.push_back({"c1 = 0", p.c1});
        if (violated(p.c) || violated(p.c1)) {
            report.kind = ClassificationCase::NoSolution;
            return report;
        }
        report.constraints.push_back({"theta-separation (informational): c2 = 0", p.c2});
        report.kind = ClassificationCase::ParabolicNonIsotropic;
        report.profile = OdeProfileHandle{
            "(2z + b c2 t^2) z'' + z'^2 - 2ab c2/(a^2+b^2) t z' + 2b c2/(a^2+b^2) (z + b c2 t^2) - b^2/(a^2+b^2) = 0",
            {{"a", p.a}, {"b", p.b}, {"c2", p.c2}}};
        return report;
    }

    const double big_a = (p.a * p.a + p.b * p.b) / (p.b * p.b);
    const double big_b = (p.b * p.c2 - p.a * p.c1) / (p.b * p.b);
    ClosedFormProfile profile;
    if (p.a == 0.0) {
        report.constraints.push_back({"c1 = 0", p.c1});
        if (violated(p.c1)) {
            report.kind = ClassificationCase::NoSolution;
            return report;
        }
        report.kind = ClassificationCase::ParabolicCase1a;
        profile = {"log_quadratic", -p.c2 / (4.0 * p.b), k.z2, 0.0, k.z1};
        report.parameters["z1"] = k.z1;
        report.parameters["z2"] = k.z2;
    } else {
        const double constraint = p.a * p.c2 + 2.0 * p.b * p.c1;
        report.constraints.push_back({"a c2 + 2 b c1 = 0", constraint});
        if (violated(constraint)) {
            report.kind = ClassificationCase::NoSolution;
            return report;
        }
        report.kind = ClassificationCase::ParabolicCase1b;
        profile = {"quadratic", p.c1 / (2.0 * p.a), 0.0, 0.0, k.z1};
        report.parameters["z1"] = k.z1;
        report.parameters["z2"] = 0.0;
    }
    const Profile z = profile.profile();
    // z'' + z'/(t A) + B/A = 0 and a z'' + (a B + c1)/A = 0.
    report.constraints.push_back({"z'' + z'/(t A) + B/A = 0", max_over_t(1.0, 3.0, [&](double t) {
                                      const ProfileJet j = z(t);
                                      return j.ddz + j.dz / (t * big_a) + big_b / big_a;
                                  })});
    report.constraints.push_back({"a z'' + (a B + c1)/A = 0", max_over_t(1.0, 3.0, [&](double t) {
                                      return p.a * z(t).ddz + (p.a * big_b + p.c1) / big_a;
                                  })});
    const double theta_max = p.a == 0.0 ? 1.0 : std::min(1.0, 0.5 / std::abs(p.a));
    ParabolicRevolutionSpec spec{p.a, p.b, p.c, p.c1, p.c2, z, 1.0, 3.0, -theta_max, theta_max};
    const ParamSurface surface = make_parabolic_revolution(spec);
    report.verification_residual = max_sms_residual(surface, {PlaneReference::Pi_yz, 1.0, 0.0}, surface.domain());
    report.profile = profile;
    return report;
}

std::string to_string(QuadricType t)
{
    switch (t) {
    case QuadricType::EllipticParaboloid: return "EllipticParaboloid";
    case QuadricType::ParabolicCylinder: return "ParabolicCylinder";
    case QuadricType::HyperbolicParaboloid: return "HyperbolicParaboloid";
    }
    return "Unknown";
}

QuadricClassification quadric_type(double a, double b, double c1, double c2, double h0)
{
    if (b == 0.0) fail(ErrorCode::InvalidSpec, "parabolic revolution requires b != 0");
    const double lambda = 2.0 * (a * c1 + b * c2) * h0 - (c1 * c1 + c2 * c2);
    QuadricType type = QuadricType::ParabolicCylinder;
    if (lambda > 0.0) type = QuadricType::EllipticParaboloid;
    if (lambda < 0.0) type = QuadricType::HyperbolicParaboloid;
    return {type, lambda};
}

QuadricCoefficients cmc_quadric_coefficients(const ParabolicParameters& p, double /*z0*/, double z1, double z2)
{
    if (p.b == 0.0) fail(ErrorCode::InvalidSpec, "parabolic revolution requires b != 0");
    const double b = p.b, a = p.a;
    return {z2, (p.c1 - 2.0 * a * z2) / (2.0 * b), (2.0 * a * a * z2 - a * p.c1 + b * p.c2) / (2.0 * b * b), z1,
            (p.c - a * z1) / b};
}

double cmc_circle_quadratic(const ParabolicParameters& p, double h0)
{
    if (p.b == 0.0) fail(ErrorCode::InvalidSpec, "parabolic revolution requires b != 0");
    return (p.a * p.c1 - p.b * p.c2 + 2.0 * p.b * p.b * h0) / (2.0 * (p.a * p.a + p.b * p.b));
}

double AlphaRevolutionLink::ode_residual(const Profile& profile, double t) const
{
    const ProfileJet p = profile(t);
    return (alpha + 1.0) * p.dz + t * p.ddz;
}

AlphaRevolutionLink alpha_singular_revolution_link(double alpha)
{
    if (alpha == -1.0) fail(ErrorCode::InvalidSpec, "alpha = -1 gives the degenerate 0-catenary");
    const double power = alpha + 1.0;
    AlphaRevolutionLink link;
    link.alpha = alpha;
    link.catenary_spec = {LineReference::Lz, power, 0.0, ArcMeasure::Relative};
    link.family = {LineReference::Lz, power, 1.0, 0.0, 0.0};
    return link;
}

}  // namespace isokit
