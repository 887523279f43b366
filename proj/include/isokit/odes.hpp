#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isokit {

/// Second-order profile equations z'' = rhs(t, z, z') without closed-form
/// solutions.
class ProfileODE {
public:
    enum class Kind {
        NonIsotropicAlphaCatenary,  ///< (z^alpha - lambda) z'' = alpha z^(alpha-1) (1/2 - z'^2/2)
        RevolutionNonIsotropic,     ///< z'' + z'/t = (1 - z'^2)/(2z)
        ParabolicNonIsotropic,      ///< parabolic revolution w.r.t. z = 0, with c = c1 = 0
    };

    static ProfileODE alpha_catenary(double alpha, double lambda);
    static ProfileODE revolution_non_isotropic();
    static ProfileODE parabolic_non_isotropic(double a, double b, double c2);

    Kind kind() const noexcept { return kind_; }
    std::string name() const;

    /// z''. Throws SingularityEncountered when a denominator drops below 1e-12.
    double rhs(double t, double z, double dz) const;

private:
    Kind kind_ = Kind::RevolutionNonIsotropic;
    double p0_ = 0.0, p1_ = 0.0, p2_ = 0.0;
};

struct IVPResult {
    std::vector<double> t;
    std::vector<double> z;
    std::vector<double> dz;
    int iterations = 0;
    std::vector<double> contraction_ratios;
    /// Successive C1 distances ||z_{k+1} - z_k|| of the Picard iterates.
    std::vector<double> iterate_distances;
    std::optional<double> zpp_origin;
    // Degenerate problem only.
    double a = 0.0;
    double radius = 0.0;
    double epsilon = 0.0;
    /// max |z - a| and max |z'| over all iterates.
    double ball_excursion = 0.0;
};

/// Classical RK4 with `steps` fixed steps from t0 to t1 (t1 < t0 integrates
/// backwards).
IVPResult integrate(const ProfileODE& ode, double t0, double z0, double dz0, double t1, int steps);

/// max |z'' - rhs| at interior nodes, z'' rebuilt from the z' samples with a
/// fourth-order centered stencil (second-order next to the ends).
double max_ode_residual(const ProfileODE& ode, const IVPResult& solution);

struct PicardOptions {
    double tol = 1e-12;
    int max_iter = 200;
    int nodes = 513;
    double safety = 0.9;
};

/// Radius bounds of the fixed-point argument for z(0) = a, eps = a/2.
struct PicardRadius {
    double epsilon;
    double self_map;     ///< min{sqrt(4 eps (a-eps)/(1+eps^2)), 2 eps (a-eps)/(1+eps^2)}
    double lipschitz;    ///< L = L1 L2 on [a - eps, a + eps]
    double contraction;  ///< min{sqrt(2/L), 1/L}
    double radius;       ///< safety * min(self_map, contraction)
};

PicardRadius picard_radius(double a, double safety = 0.9);

/// Samples of a profile and its derivative on a uniform grid starting at 0.
struct SampledProfile {
    std::vector<double> t;
    std::vector<double> z;
    std::vector<double> dz;
};

/// One application of
///   (T z)(t) = a + int_0^t (1/r) int_0^r tau (1 - z'^2)/(2 z) dtau dr
/// by nested cumulative Simpson on the grid; (T z)' = (1/t) int_0^t (...).
SampledProfile operator_T_apply(double a, const SampledProfile& z);

/// Fixed point of T on [0, R] for z(0) = a, z'(0) = 0.
IVPResult picard_solve_degenerate(double a, const PicardOptions& options = {});

/// RK4 continuation of a Picard solution from its endpoint to t_end.
IVPResult continue_with_rk(const IVPResult& picard, double t_end, int steps);

/// Picard solutions for each a, computed concurrently.
std::vector<IVPResult> continuity_in_a(std::span<const double> a_values, const PicardOptions& options = {});

/// Sup-norm distance of two solutions on their common interval, using linear
/// interpolation of the second onto the first grid.
double sup_difference(const IVPResult& lhs, const IVPResult& rhs);

/// Linear interpolation of z at t.
double interpolate_z(const IVPResult& solution, double t);

}  // namespace isokit
