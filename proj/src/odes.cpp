#include "isokit/odes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <string>

#include "detail.hpp"
#include "isokit/error.hpp"
#include "isokit/quadrature.hpp"

namespace isokit {

namespace {

constexpr double kAxisRegularization = 1e-8;

void require_denominator(double value, const char* what, double t)
{
    if (!(std::abs(value) >= detail::kSingularThreshold)) {
        fail(ErrorCode::SingularityEncountered, std::string(what) + " vanishes at t=" + std::to_string(t));
    }
}

}  // namespace

ProfileODE ProfileODE::alpha_catenary(double alpha, double lambda)
{
    ProfileODE ode;
    ode.kind_ = Kind::NonIsotropicAlphaCatenary;
    ode.p0_ = alpha;
    ode.p1_ = lambda;
    return ode;
}

ProfileODE ProfileODE::revolution_non_isotropic()
{
    ProfileODE ode;
    ode.kind_ = Kind::RevolutionNonIsotropic;
    return ode;
}

ProfileODE ProfileODE::parabolic_non_isotropic(double a, double b, double c2)
{
    if (b == 0.0) fail(ErrorCode::InvalidSpec, "parabolic revolution requires b != 0");
    ProfileODE ode;
    ode.kind_ = Kind::ParabolicNonIsotropic;
    ode.p0_ = a;
    ode.p1_ = b;
    ode.p2_ = c2;
    return ode;
}

std::string ProfileODE::name() const
{
    switch (kind_) {
    case Kind::NonIsotropicAlphaCatenary: return "NonIsotropicAlphaCatenary";
    case Kind::RevolutionNonIsotropic: return "RevolutionNonIsotropic";
    case Kind::ParabolicNonIsotropic: return "ParabolicNonIsotropic";
    }
    return "Unknown";
}

double ProfileODE::rhs(double t, double z, double dz) const
{
    switch (kind_) {
    case Kind::NonIsotropicAlphaCatenary: {
        const double alpha = p0_, lambda = p1_;
        const double weight = detail::real_power(z, alpha) - lambda;
        require_denominator(weight, "z^alpha - lambda", t);
        const double force = alpha == 0.0 ? 0.0 : alpha * detail::real_power(z, alpha - 1.0);
        return force * (0.5 - 0.5 * dz * dz) / weight;
    }
    case Kind::RevolutionNonIsotropic: {
        require_denominator(z, "2z", t);
        if (t < 0.0) fail(ErrorCode::SingularityEncountered, "revolution profile needs t >= 0");
        if (t < kAxisRegularization) return (1.0 - dz * dz) / (4.0 * z);
        return (1.0 - dz * dz) / (2.0 * z) - dz / t;
    }
    case Kind::ParabolicNonIsotropic: {
        const double a = p0_, b = p1_, c2 = p2_;
        const double s = a * a + b * b;
        const double lead = 2.0 * z + b * c2 * t * t;
        require_denominator(lead, "2z + b c2 t^2", t);
        const double rest = dz * dz - 2.0 * a * b * c2 / s * t * dz + 2.0 * b * c2 / s * (z + b * c2 * t * t) -
                            b * b / s;
        return -rest / lead;
    }
    }
    return 0.0;
}

IVPResult integrate(const ProfileODE& ode, double t0, double z0, double dz0, double t1, int steps)
{
    if (steps < 1) fail(ErrorCode::StepFailure, "need at least one step");
    if (ode.kind() == ProfileODE::Kind::RevolutionNonIsotropic && (t0 < 0.0 || t1 < 0.0)) {
        fail(ErrorCode::SingularityEncountered, "revolution profile is defined for t >= 0");
    }
    IVPResult out;
    out.t.reserve(steps + 1);
    out.z.reserve(steps + 1);
    out.dz.reserve(steps + 1);
    const double h = (t1 - t0) / steps;
    double z = z0, dz = dz0;
    out.t.push_back(t0);
    out.z.push_back(z);
    out.dz.push_back(dz);
    for (int i = 0; i < steps; ++i) {
        const double t = t0 + i * h;
        const double k1z = dz;
        const double k1v = ode.rhs(t, z, dz);
        const double k2z = dz + 0.5 * h * k1v;
        const double k2v = ode.rhs(t + 0.5 * h, z + 0.5 * h * k1z, k2z);
        const double k3z = dz + 0.5 * h * k2v;
        const double k3v = ode.rhs(t + 0.5 * h, z + 0.5 * h * k2z, k3z);
        const double k4z = dz + h * k3v;
        const double k4v = ode.rhs(t + h, z + h * k3z, k4z);
        z += h / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z);
        dz += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if (!std::isfinite(z) || !std::isfinite(dz)) {
            fail(ErrorCode::StepFailure, "non-finite state at t=" + std::to_string(t + h));
        }
        out.t.push_back(i + 1 == steps ? t1 : t0 + (i + 1) * h);
        out.z.push_back(z);
        out.dz.push_back(dz);
    }
    return out;
}

double max_ode_residual(const ProfileODE& ode, const IVPResult& s)
{
    const std::size_t n = s.t.size();
    if (n < 3) return 0.0;
    const double h = s.t[1] - s.t[0];
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double ddz = 0.0;
        if (i >= 2 && i + 2 < n) {
            ddz = (-s.dz[i + 2] + 8.0 * s.dz[i + 1] - 8.0 * s.dz[i - 1] + s.dz[i - 2]) / (12.0 * h);
        } else {
            ddz = (s.dz[i + 1] - s.dz[i - 1]) / (2.0 * h);
        }
        worst = std::max(worst, std::abs(ddz - ode.rhs(s.t[i], s.z[i], s.dz[i])));
    }
    return worst;
}

PicardRadius picard_radius(double a, double safety)
{
    if (!(a > 0.0)) fail(ErrorCode::DomainError, "degenerate IVP requires a > 0");
    PicardRadius r{};
    const double eps = 0.5 * a;
    r.epsilon = eps;
    const double q = eps * (a - eps) / (1.0 + eps * eps);
    r.self_map = std::min(std::sqrt(4.0 * q), 2.0 * q);
    // Lipschitz constants of x -> 1/(2x) and x -> 1 - x^2 on [a - eps, a + eps],
    // sampled as the maximum slope magnitude.
    double l1 = 0.0, l2 = 0.0;
    constexpr int kSamples = 1001;
    for (int i = 0; i < kSamples; ++i) {
        const double x = (a - eps) + 2.0 * eps * i / (kSamples - 1);
        l1 = std::max(l1, 1.0 / (2.0 * x * x));
        l2 = std::max(l2, 2.0 * std::abs(x));
    }
    r.lipschitz = l1 * l2;
    r.contraction = std::min(std::sqrt(2.0 / r.lipschitz), 1.0 / r.lipschitz);
    r.radius = safety * std::min(r.self_map, r.contraction);
    return r;
}

SampledProfile operator_T_apply(double a, const SampledProfile& z)
{
    const std::size_t n = z.t.size();
    if (n < 3 || z.z.size() != n || z.dz.size() != n) {
        fail(ErrorCode::InvalidInterval, "operator T needs >= 3 matching samples");
    }
    const double h = z.t[1] - z.t[0];
    std::vector<double> inner(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(z.z[i] > detail::kSingularThreshold)) {
            fail(ErrorCode::DivisionByZero, "profile reaches zero at t=" + std::to_string(z.t[i]));
        }
        inner[i] = z.t[i] * (1.0 - z.dz[i] * z.dz[i]) / (2.0 * z.z[i]);
    }
    const std::vector<double> moment = cumulative_simpson(inner, h);
    SampledProfile out;
    out.t = z.t;
    out.dz.resize(n);
    out.dz[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) out.dz[i] = moment[i] / z.t[i];
    out.z = cumulative_simpson(out.dz, h);
    for (double& v : out.z) v += a;
    return out;
}

IVPResult picard_solve_degenerate(double a, const PicardOptions& options)
{
    if (!(a > 0.0)) fail(ErrorCode::DomainError, "degenerate IVP requires a > 0");
    if (options.nodes < 5 || options.nodes % 2 == 0) {
        fail(ErrorCode::InvalidInterval, "Picard grid needs an odd node count >= 5");
    }
    const PicardRadius bound = picard_radius(a, options.safety);
    const int n = options.nodes;

    SampledProfile current;
    current.t.resize(n);
    for (int i = 0; i < n; ++i) current.t[i] = bound.radius * i / (n - 1);
    current.z.assign(n, a);
    current.dz.assign(n, 0.0);

    IVPResult out;
    out.a = a;
    out.radius = bound.radius;
    out.epsilon = bound.epsilon;

    bool converged = false;
    int it = 0;
    while (it < options.max_iter) {
        SampledProfile next = operator_T_apply(a, current);
        ++it;
        double dz_max = 0.0, dd_max = 0.0;
        for (int i = 0; i < n; ++i) {
            dz_max = std::max(dz_max, std::abs(next.z[i] - current.z[i]));
            dd_max = std::max(dd_max, std::abs(next.dz[i] - current.dz[i]));
            out.ball_excursion = std::max({out.ball_excursion, std::abs(next.z[i] - a), std::abs(next.dz[i])});
        }
        const double distance = dz_max + dd_max;
        if (!out.iterate_distances.empty()) {
            const double ratio = distance / out.iterate_distances.back();
            out.contraction_ratios.push_back(ratio);
            if (ratio >= 1.0 && distance >= options.tol) {
                fail(ErrorCode::NonContraction, "Picard iterates stopped contracting (ratio " +
                                                    std::to_string(ratio) + ")");
            }
        }
        out.iterate_distances.push_back(distance);
        current = std::move(next);
        if (distance < options.tol) {
            converged = true;
            break;
        }
    }
    if (!converged) fail(ErrorCode::MaxIterExceeded, "Picard iteration did not reach tolerance");

    out.iterations = it;
    out.t = std::move(current.t);
    out.z = std::move(current.z);
    out.dz = std::move(current.dz);

    // Least-squares quadratic c0 + c1 t + c2 t^2 through the first nodes.
    constexpr int kFitNodes = 9;
    std::array<std::array<double, 4>, 3> m{};
    for (int i = 0; i < kFitNodes; ++i) {
        const double t = out.t[i];
        const std::array<double, 3> basis{1.0, t, t * t};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) m[r][c] += basis[r] * basis[c];
            m[r][3] += basis[r] * out.z[i];
        }
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        }
        std::swap(m[col], m[pivot]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    out.zpp_origin = 2.0 * m[2][3] / m[2][2];
    return out;
}

IVPResult continue_with_rk(const IVPResult& picard, double t_end, int steps)
{
    if (picard.t.empty()) fail(ErrorCode::InvalidInterval, "empty Picard solution");
    return integrate(ProfileODE::revolution_non_isotropic(), picard.t.back(), picard.z.back(), picard.dz.back(),
                     t_end, steps);
}

std::vector<IVPResult> continuity_in_a(std::span<const double> a_values, const PicardOptions& options)
{
    std::vector<std::future<IVPResult>> jobs;
    jobs.reserve(a_values.size());
    for (double a : a_values) {
        jobs.push_back(std::async(std::launch::async, [a, options] { return picard_solve_degenerate(a, options); }));
    }
    std::vector<IVPResult> out;
    out.reserve(jobs.size());
    for (auto& job : jobs) out.push_back(job.get());
    return out;
}

double interpolate_z(const IVPResult& s, double t)
{
    if (s.t.size() < 2) fail(ErrorCode::InvalidInterval, "need at least two samples");
    const bool ascending = s.t.back() > s.t.front();
    const double lo = ascending ? s.t.front() : s.t.back();
    const double hi = ascending ? s.t.back() : s.t.front();
    if (t < lo - 1e-14 * std::max(1.0, std::abs(lo)) || t > hi + 1e-14 * std::max(1.0, std::abs(hi))) {
        fail(ErrorCode::DomainError, "interpolation point outside the solution interval");
    }
    std::size_t k = 0;
    if (ascending) {
        k = static_cast<std::size_t>(std::upper_bound(s.t.begin(), s.t.end(), t) - s.t.begin());
    } else {
        k = static_cast<std::size_t>(
            std::upper_bound(s.t.begin(), s.t.end(), t, [](double x, double y) { return x > y; }) - s.t.begin());
    }
    k = std::clamp<std::size_t>(k, 1, s.t.size() - 1);
    const double t0 = s.t[k - 1], t1 = s.t[k];
    const double w = (t - t0) / (t1 - t0);
    return (1.0 - w) * s.z[k - 1] + w * s.z[k];
}

double sup_difference(const IVPResult& lhs, const IVPResult& rhs)
{
    const double lo = std::max(std::min(lhs.t.front(), lhs.t.back()), std::min(rhs.t.front(), rhs.t.back()));
    const double hi = std::min(std::max(lhs.t.front(), lhs.t.back()), std::max(rhs.t.front(), rhs.t.back()));
    if (!(lo <= hi)) fail(ErrorCode::InvalidInterval, "solutions have no common interval");
    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.t.size(); ++i) {
        const double t = lhs.t[i];
        if (t < lo || t > hi) continue;
        worst = std::max(worst, std::abs(lhs.z[i] - interpolate_z(rhs, t)));
    }
    return worst;
}

}  // namespace isokit
