// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "isokit/curves.hpp"
#include "isokit/error.hpp"
#include "isokit/odes.hpp"
#include "isokit/singular.hpp"
#include "isokit/surfaces.hpp"
#include "isokit/variational.hpp"

#include "oracles.hpp"

using namespace isokit;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double time_limit;
    std::function<Verdict()> run;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

double grid(double lo, double hi, int i, int n) { return lo + (hi - lo) * i / (n - 1); }

Verdict catenary_recovery()
{
    const auto r = minimize({LineReference::Lz, 1.0, 0.0}, {1.0, 0.0, oracle::kE, 1.0}, 200);
    double err = 0.0;
    for (std::size_t i = 0; i < r.curve.t.size(); ++i) {
        err = std::max(err, std::abs(r.curve.z[i] - std::log(r.curve.t[i])));
    }
    return {err < 1e-4, fmt("max |z_i - ln t_i| = %.3e (limit 1e-4)", err)};
}

Verdict family_residuals()
{
    double worst = 0.0;
    for (double alpha : {1.0, 2.0, 3.0}) {
        for (double c : {-1.5, 0.5, 2.0}) {
            for (double d : {-1.0, 0.0, 3.0}) {
                for (double lambda : {0.0, 0.5}) {
                    if (alpha != 1.0 && lambda != 0.0) continue;
                    const Profile p = catenary_profile({LineReference::Lz, alpha, c, d, lambda});
                    const WeightFunctionalSpec spec{LineReference::Lz, alpha, lambda};
                    for (int i = 0; i < 100; ++i) {
                        worst = std::max(worst, std::abs(el_residual(spec, p, grid(1.0, 4.0, i, 100))));
                    }
                }
            }
        }
    }
    return {worst < 1e-9, fmt("max |EL residual| = %.3e (limit 1e-9)", worst)};
}

Verdict relative_normal()
{
    struct Sample {
        std::function<double(double)> x, z;
        double lo, hi;
    };
    const std::vector<Sample> curves = {
        {[](double t) { return t; }, [](double t) { return std::log(t); }, 1.0, 3.0},
        {[](double t) { return t + t * t * t; }, [](double t) { return std::sin(2 * t); }, -1.0, 1.0},
        {[](double t) { return std::exp(t); }, [](double t) { return t * t; }, -0.5, 1.5},
        {[](double t) { return -2 * t; }, [](double t) { return 0.3 * t * t - t; }, 0.0, 2.0},
        {[](double t) { return t; }, [](double t) { return std::cosh(t); }, -1.0, 1.0},
    };
    double worst = 0.0, min_det = INFINITY;
    for (const auto& s : curves) {
        const PlaneCurve c = oracle::fd_curve(s.x, s.z, s.lo, s.hi);
        for (int i = 0; i < 100; ++i) {
            const double t = c.t_lo() + (c.t_hi() - c.t_lo()) * (i + 0.5) / 100;
            const CurveJet j = c(t);
            min_det = std::min(min_det, det(IsoVec2{j.dx, j.dz}, parabolic_normal(c, t)));
            const double k = curvature(c, t);
            const double dnx = oracle::derivative([&](double u) { return parabolic_normal(c, u).x; }, t, 1e-4);
            const double dnz = oracle::derivative([&](double u) { return parabolic_normal(c, u).z; }, t, 1e-4);
            const double scale = std::max(1.0, std::hypot(k * j.dx, k * j.dz));
            worst = std::max(worst, std::hypot(-dnx - k * j.dx, -dnz - k * j.dz) / scale);
        }
    }
    return {worst < 1e-6 && min_det > 0.0,
            fmt("max rel. error of -dN = kappa T: %.3e (limit 1e-6), min det = %.3e (> 0)", worst, min_det)};
}

Verdict minimal_revolution()
{
    double worst = 0.0;
    for (double c : {0.5, 1.0, 3.0}) {
        const Profile p = [c](double t) { return ProfileJet{c * std::log(t), c / t, -c / (t * t)}; };
        const ParamSurface s = make_revolution({p, 0.5, 3.0});
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                worst = std::max(worst, std::abs(mean_curvature(s, grid(0.5, 3.0, i, 20), grid(0.0, 6.283185307179586, j, 20))));
            }
        }
    }
    return {worst < 1e-10, fmt("max |H| = %.3e (limit 1e-10)", worst)};
}

Verdict catenoid_boundary()
{
    auto gen = oracle::rng(42);
    std::uniform_real_distribution<double> radius(0.05, 10.0), height(-5.0, 5.0);
    double worst = 0.0;
    int solved = 0;
    for (int i = 0; i < 100; ++i) {
        const CatenoidBoundary b{radius(gen), height(gen), radius(gen), height(gen)};
        const CatenoidSolution s = solve_catenoid_boundary(b);
        if (s.status != CatenoidStatus::Unique) continue;
        ++solved;
        const double scale = std::max({1.0, std::abs(b.z1), std::abs(b.z2)});
        worst = std::max({worst, std::abs(s.c * std::log(b.r1) + s.d - b.z1) / scale,
                          std::abs(s.c * std::log(b.r2) + s.d - b.z2) / scale,
                          std::abs(s.c - (b.z2 - b.z1) / std::log(b.r2 / b.r1)) / std::max(1.0, std::abs(s.c))});
    }
    int rejected = 0;
    for (int i = 0; i < 20; ++i) {
        const double r = radius(gen), z1 = height(gen);
        if (solve_catenoid_boundary({r, z1, r, z1 + 0.5 + i}).status == CatenoidStatus::NoSolution) ++rejected;
    }
    return {solved == 100 && worst < 1e-12 && rejected == 20,
            fmt("%g/100 solved, max residual %.3e (limit 1e-12), %g/20 equal-radii cases rejected", solved, worst,
                rejected)};
}

Verdict degenerate_ivp()
{
    double zpp_err = 0.0, overlap = 0.0, max_ratio = 0.0;
    bool monotone = true, axis = true;
    for (double a : {0.5, 1.0, 2.0}) {
        const IVPResult p = picard_solve_degenerate(a);
        axis = axis && p.z.front() == a && p.dz.front() == 0.0;
        for (double r : p.contraction_ratios) max_ratio = std::max(max_ratio, r);
        for (std::size_t i = 1; i < p.iterate_distances.size(); ++i) {
            monotone = monotone && p.iterate_distances[i] < p.iterate_distances[i - 1];
        }
        zpp_err = std::max(zpp_err, std::abs(p.zpp_origin.value() - 1 / (4 * a)));
        const double r = p.t.back();
        const IVPResult back = integrate(ProfileODE::revolution_non_isotropic(), r, p.z.back(), p.dz.back(), r / 2, 256);
        for (std::size_t k = 0; k < back.t.size(); ++k) {
            overlap = std::max(overlap, std::abs(back.z[k] - p.z[p.t.size() - 1 - k]));
        }
    }
    const bool pass = monotone && max_ratio < 1.0 && axis && zpp_err < 1e-6 && overlap < 1e-7;
    return {pass, fmt("max ratio %.3f, |z''(0) - 1/(4a)| = %.3e (limit 1e-6), RK overlap %.3e (limit 1e-7)", max_ratio,
                      zpp_err, overlap)};
}

Verdict helicoidal()
{
    bool rejected = true;
    for (auto ref : {PlaneReference::Pi_yz, PlaneReference::Pi_xy}) {
        for (double c : {-2.0, 0.1, 1.0}) {
            rejected = rejected && classify_helicoidal(c, ref).kind == ClassificationCase::NoHelicoidal;
        }
    }
    double worst = 0.0;
    for (double z2 : {-1.0, 0.5, 2.0}) {
        const auto report = classify_helicoidal(0.0, PlaneReference::Pi_yz, {0.7, z2});
        const Profile p = std::get<ClosedFormProfile>(report.profile).profile();
        const ParamSurface s = make_revolution({p, 0.5, 2.0, -1.2, 1.2});
        for (int i = 0; i < 50; ++i) {
            for (int j = 0; j < 16; ++j) {
                worst = std::max(worst, std::abs(sms_residual(s, {}, grid(0.5, 2.0, i, 50), grid(-1.2, 1.2, j, 16))));
            }
        }
    }
    return {rejected && worst < 1e-9,
            fmt("c != 0 rejected on both planes: %g, max sms residual %.3e (limit 1e-9)", rejected, worst)};
}

Verdict parabolic_classification()
{
    double worst = 0.0;
    bool cases_ok = true;
    const std::vector<ParabolicParameters> case1a = {{0.0, 1.0, 0.0, 0.0, 1.0}, {0.0, 2.0, 0.5, 0.0, -1.0}, {0.0, 1.0, 0.0, 0.0, 0.0}};
    const std::vector<ParabolicParameters> case1b = {{1.0, 1.0, 0.0, 1.0, -2.0}, {2.0, 0.5, 1.0, -1.0, 0.5}, {-1.0, 1.0, 0.3, 0.5, 1.0}};
    for (const auto& p : case1a) {
        const auto r = classify_parabolic_revolution(p, PlaneReference::Pi_yz, {1.0, 0.5});
        cases_ok = cases_ok && r.kind == ClassificationCase::ParabolicCase1a;
        worst = std::max(worst, r.verification_residual.value_or(INFINITY));
    }
    for (const auto& p : case1b) {
        const auto r = classify_parabolic_revolution(p, PlaneReference::Pi_yz, {1.0, 0.5});
        cases_ok = cases_ok && r.kind == ClassificationCase::ParabolicCase1b;
        worst = std::max(worst, r.verification_residual.value_or(INFINITY));
    }
    auto names = [](const ClassificationReport& r, const std::string& name) {
        if (r.kind != ClassificationCase::NoSolution) return false;
        for (const auto& c : r.constraints) {
            if (c.name == name && std::abs(c.residual) > 0.0) return true;
        }
        return false;
    };
    const bool rejected = names(classify_parabolic_revolution({0.0, 1.0, 0.0, 0.5, 1.0}, PlaneReference::Pi_yz), "c1 = 0")
                          && names(classify_parabolic_revolution({1.0, 1.0, 0.0, 1.0, 1.0}, PlaneReference::Pi_yz),
                                   "a c2 + 2 b c1 = 0");
    return {cases_ok && rejected && worst < 1e-9,
            fmt("cases identified: %g, violations named: %g, max verification residual %.3e (limit 1e-9)", cases_ok,
                rejected, worst)};
}

Verdict quadric_typing()
{
    bool reduction = true, minimal = true;
    double trace = 0.0;
    for (double c1 = -2.0; c1 <= 2.0; c1 += 0.5) {
        for (double c2 = -2.0; c2 <= 2.0; c2 += 0.5) {
            for (double b : {-1.5, 1.0, 2.0}) {
                const auto q = quadric_type(0.0, b, c1, c2, c2 / (2 * b));
                reduction = reduction && std::abs(q.discriminant + c1 * c1) < 1e-12;
                if (c1 == 0.0 && c2 == 0.0) continue;
                for (double a : {-1.0, 0.0, 0.7}) {
                    const auto m = quadric_type(a, b, c1, c2, 0.0);
                    minimal = minimal && m.type == QuadricType::HyperbolicParaboloid
                              && std::abs(m.discriminant + c1 * c1 + c2 * c2) < 1e-12;
                    const ParabolicParameters p{a, b, 0.0, c1, c2};
                    const auto k = cmc_quadric_coefficients(p, 0.0, 0.3, cmc_circle_quadratic(p, 0.0));
                    trace = std::max(trace, std::abs(k.A + k.C));
                }
            }
        }
    }
    return {reduction && minimal && trace < 1e-12,
            fmt("a=0 reduction: %g, minimal hyperbolic: %g, max |trace| = %.3e (limit 1e-12)", reduction, minimal, trace)};
}

Verdict mean_curvature_cross_check()
{
    double worst = 0.0;
    auto rel = [](double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
    const Profile p = [](double t) {
        return ProfileJet{t * t * t - std::sin(t), 3 * t * t - std::cos(t), 6 * t + std::sin(t)};
    };
    for (double pitch : {0.0, 0.8}) {
        const ParamSurface s = make_helicoidal({p, pitch, 0.5, 2.0, 0.0, 6.283185307179586});
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                const double t = grid(0.5, 2.0, i, 20);
                worst = std::max(worst, rel(mean_curvature(s, t, grid(0.0, 6.28, j, 20)), revolution_mean_curvature(p, t)));
            }
        }
    }
    for (const ParabolicParameters& q : {ParabolicParameters{0.7, 1.3, -0.4, 0.9, -0.6}, ParabolicParameters{0.0, -1.0, 1.0, 0.0, 2.0}}) {
        const ParabolicRevolutionSpec spec{q.a, q.b, q.c, q.c1, q.c2, p, 1.0, 2.0, -1.0, 1.0};
        const ParamSurface s = make_parabolic_revolution(spec);
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                const double t = grid(1.0, 2.0, i, 20);
                const double th = grid(-1.0, 1.0, j, 20);
                // b < 0 reverses the orientation and the surface exchanges its parameters.
                const double h = s.swapped() ? mean_curvature(s, th, t) : mean_curvature(s, t, th);
                worst = std::max(worst, rel(h, parabolic_revolution_mean_curvature(spec, t)));
            }
        }
    }
    return {worst < 1e-8, fmt("max relative difference %.3e (limit 1e-8)", worst)};
}

Verdict relative_area_oracle()
{
    const Profile p = [](double t) { return ProfileJet{std::log(t), 1 / t, -1 / (t * t)}; };
    const ParamSurface s = make_revolution({p, 1.0, oracle::kE});
    const double expected = oracle::kPi * (oracle::kE * oracle::kE + 1) / 2;
    const double err = std::abs(relative_area(s, s.domain()) - expected) / expected;
    return {err < 1e-6, fmt("relative error %.3e (limit 1e-6)", err)};
}

Verdict triviality()
{
    auto gen = oracle::rng(77);
    std::uniform_real_distribution<double> height(-10.0, 10.0);
    double worst = 0.0;
    for (double alpha : {1.0, 2.0, 3.0}) {
        const WeightFunctionalSpec spec{LineReference::Lz, alpha, 0.2, ArcMeasure::Isotropic};
        for (int k = 0; k < 10; ++k) {
            DiscreteCurve a = DiscreteCurve::linear(1.0, 0.5, 2.0, -1.0, 100);
            DiscreteCurve b = a;
            for (std::size_t i = 1; i + 1 < a.z.size(); ++i) {
                a.z[i] = height(gen);
                b.z[i] = height(gen);
            }
            worst = std::max(worst, std::abs(evaluate_functional(spec, a) - evaluate_functional(spec, b)));
        }
    }
    return {worst < 1e-12, fmt("max |F[a] - F[b]| = %.3e (limit 1e-12)", worst)};
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "closed-form catenary recovery", 5.0, catenary_recovery},
        {2, "alpha-catenary family residuals", 1.0, family_residuals},
        {3, "relative-normal properties", 1.0, relative_normal},
        {4, "minimal revolution", 1.0, minimal_revolution},
        {5, "catenoid boundary", 1.0, catenoid_boundary},
        {6, "degenerate IVP", 10.0, degenerate_ivp},
        {7, "helicoidal impossibility", 2.0, helicoidal},
        {8, "parabolic-revolution classification", 2.0, parabolic_classification},
        {9, "quadric typing", 1.0, quadric_typing},
        {10, "mean-curvature cross-validation", 2.0, mean_curvature_cross_check},
        {11, "relative-area oracle", 1.0, relative_area_oracle},
        {12, "triviality reproduction", 1.0, triviality},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v{false, ""};
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("threw ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.time_limit;
        const bool pass = v.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s %2d %s: %s; %.3f s (limit %g s)\n", pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(),
                    seconds, c.time_limit);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
