#pragma once

#include <vector>

#include "isokit/curves.hpp"

namespace isokit {

/// Arc-length element used by the weight functional. Isotropic replaces the
/// relative element ds* = (1/2 + z'^2/2) dt by the degenerate ds = dt; it
/// exists to reproduce the trivial (endpoint-determined) hanging problem.
enum class ArcMeasure { Relative, Isotropic };

/// Weight functional int (w^alpha - lambda) ds* of a graph (t, z(t)), where
/// w = t for the isotropic line L_z and w = z for the line L_x.
struct WeightFunctionalSpec {
    LineReference reference = LineReference::Lz;
    double alpha = 1.0;
    double lambda = 0.0;
    ArcMeasure measure = ArcMeasure::Relative;
};

/// Graph samples z_i over a strictly increasing grid t_i.
struct DiscreteCurve {
    std::vector<double> t;
    std::vector<double> z;

    /// Uniform grid with n cells on [t_a, t_b], z linear between the endpoints.
    static DiscreteCurve linear(double t_a, double z_a, double t_b, double z_b, int n);
};

/// Trapezoid value over cells with forward-difference slopes.
double evaluate_functional(const WeightFunctionalSpec& spec, const DiscreteCurve& curve);

/// Exact gradient of the discrete functional w.r.t. the interior z_1..z_{N-1}.
std::vector<double> functional_gradient(const WeightFunctionalSpec& spec, const DiscreteCurve& curve);

/// Symmetric tridiagonal Hessian with respect to the interior values.
struct TridiagonalHessian {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;  ///< entry (i, i+1)
};
TridiagonalHessian functional_hessian(const WeightFunctionalSpec& spec, const DiscreteCurve& curve);

struct Endpoints {
    double t_a = 0.0, z_a = 0.0;
    double t_b = 1.0, z_b = 0.0;
};

struct MinimizeOptions {
    int max_iter = 10'000;
    /// Stop once the Euclidean interior gradient norm is below tol_factor * N.
    double tol_factor = 1e-10;
};

struct MinimizeResult {
    DiscreteCurve curve;
    double functional = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    int descent_fallbacks = 0;
};

/// Critical point of the discrete functional on a uniform grid of n cells
/// with both endpoints held fixed. Damped Newton on the tridiagonal discrete
/// Euler-Lagrange system, falling back to backtracking gradient descent when
/// the Newton step fails to reduce the residual.
MinimizeResult minimize(const WeightFunctionalSpec& spec, const Endpoints& endpoints, int n,
                        const MinimizeOptions& options = {});

/// Left minus right side of the continuous Euler-Lagrange equation:
///   L_z: alpha t^(alpha-1) z' + (t^alpha - lambda) z''
///   L_x: (z^alpha - lambda) z'' - alpha z^(alpha-1) (1/2 - z'^2/2)
double el_residual(const WeightFunctionalSpec& spec, const Profile& profile, double t);

struct LambdaSweepEntry {
    double lambda = 0.0;
    MinimizeResult result;
    double relative_length = 0.0;  ///< discrete int ds* of the critical curve
};

/// Critical curves for a list of multipliers, with the relative length each
/// one attains. Lets callers bracket the multiplier matching a target length.
std::vector<LambdaSweepEntry> lambda_sweep(WeightFunctionalSpec spec, const Endpoints& endpoints,
                                           int n, const std::vector<double>& lambdas,
                                           const MinimizeOptions& options = {});

}  // namespace isokit
