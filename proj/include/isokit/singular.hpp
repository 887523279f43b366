#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isokit/surfaces.hpp"
#include "isokit/variational.hpp"

namespace isokit {

/// Reference plane of the hanging-surface weight: the isotropic plane x = 0
/// (distance x, normal component <N_par, d/dx>) or the non-isotropic plane
/// z = 0 (distance z, normal component <<N_par, d/dz>>).
enum class PlaneReference { Pi_yz, Pi_xy };

struct SingularSpec {
    PlaneReference reference = PlaneReference::Pi_yz;
    double alpha = 1.0;
    double lambda = 0.0;
};

/// H - alpha * (normal component) / (2 (distance - lambda)). The surface point
/// must lie in the positive half-space of the reference plane.
double sms_residual(const ParamSurface& surface, const SingularSpec& spec, double u, double v);

struct CatenoidBoundary {
    double r1 = 1.0, z1 = 0.0;
    double r2 = 2.0, z2 = 0.0;
};

enum class CatenoidStatus { Unique, NoSolution, Degenerate };

/// Isotropic catenoid z = c ln t + d through two coaxial circles. Degenerate
/// means equal radii and equal heights: the two conditions collapse into one
/// and leave c undetermined, so only d = z1 - c ln r1 is reported (with c = 0).
struct CatenoidSolution {
    CatenoidStatus status = CatenoidStatus::Unique;
    double c = 0.0;
    double d = 0.0;
};

CatenoidSolution solve_catenoid_boundary(const CatenoidBoundary& boundary);

enum class ClassificationCase {
    HorizontalPlane,
    EuclideanRevolutionInverse,
    NonIsotropicODE,
    ParabolicCase1a,
    ParabolicCase1b,
    ParabolicNonIsotropic,
    NoHelicoidal,
    NoSolution,
};

std::string to_string(ClassificationCase c);

/// Closed-form profile z(t) = quadratic t^2 + log_coeff ln t + inverse / t + constant.
struct ClosedFormProfile {
    std::string kind;
    double quadratic = 0.0;
    double log_coeff = 0.0;
    double inverse = 0.0;
    double constant = 0.0;

    Profile profile() const;
};

/// Reference to a profile ODE of the `odes` module that has no closed form.
struct OdeProfileHandle {
    std::string equation;
    std::map<std::string, double> parameters;
};

struct ConstraintResidual {
    std::string name;
    double residual = 0.0;
};

struct ClassificationReport {
    ClassificationCase kind = ClassificationCase::NoSolution;
    std::map<std::string, double> parameters;
    std::vector<ConstraintResidual> constraints;
    std::variant<std::monostate, ClosedFormProfile, OdeProfileHandle> profile;
    /// max |sms_residual| of the closed-form profile on the verification grid.
    std::optional<double> verification_residual;
};

/// Free constants used to instantiate the closed-form families in a report.
struct FamilyConstants {
    double z1 = 1.0;
    double z2 = 1.0;
};

/// Tolerance on constraint residuals when deciding compatibility.
inline constexpr double kConstraintTolerance = 1e-12;

/// Helicoidal surfaces (t cos th, t sin th, c th + z(t)) that are singular
/// minimal: only c = 0 survives.
ClassificationReport classify_helicoidal(double pitch, PlaneReference reference,
                                         FamilyConstants constants = {});

struct ParabolicParameters {
    double a = 0.0, b = 1.0, c = 0.0, c1 = 0.0, c2 = 0.0;
};

ClassificationReport classify_parabolic_revolution(const ParabolicParameters& params,
                                                   PlaneReference reference,
                                                   FamilyConstants constants = {});

enum class QuadricType { EllipticParaboloid, ParabolicCylinder, HyperbolicParaboloid };

std::string to_string(QuadricType t);

struct QuadricClassification {
    QuadricType type;
    double discriminant;  ///< 2 (a c1 + b c2) H0 - (c1^2 + c2^2)
};

/// Type of the constant mean curvature H0 surface of parabolic revolution.
QuadricClassification quadric_type(double a, double b, double c1, double c2, double h0);

/// Coefficients of z - z0 = A x^2 + 2 B x y + C y^2 + D x + E y for the
/// parabolic revolution of the isotropic circle z0 + z1 t + z2 t^2.
struct QuadricCoefficients {
    double A, B, C, D, E;
};

QuadricCoefficients cmc_quadric_coefficients(const ParabolicParameters& params, double z0, double z1,
                                             double z2);

/// z2 making the isotropic circle profile have constant mean curvature H0.
double cmc_circle_quadratic(const ParabolicParameters& params, double h0);

/// Profile ODE (alpha + 1) z' + t z'' = 0 of alpha-singular minimal surfaces
/// of revolution w.r.t. Pi_yz, with its (alpha + 1)-catenary solution family.
struct AlphaRevolutionLink {
    double alpha;
    WeightFunctionalSpec catenary_spec;  ///< L_z functional with power alpha + 1
    CatenaryFamily family;               ///< c = 1, d = 0 representative

    /// (alpha + 1) z' + t z''.
    double ode_residual(const Profile& profile, double t) const;
};

AlphaRevolutionLink alpha_singular_revolution_link(double alpha);

}  // namespace isokit
