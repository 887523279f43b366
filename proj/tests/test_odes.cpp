#include <cmath>
#include <vector>

#include "doctest.h"

#include "isokit/error.hpp"
#include "isokit/odes.hpp"
#include "isokit/singular.hpp"
#include "isokit/variational.hpp"

#include "oracles.hpp"

using namespace isokit;

namespace {

// Profile that is exact at the solver nodes (z'' from the equation itself)
// and linear in between.
Profile node_profile(const ProfileODE& ode, const IVPResult& s)
{
    return [&ode, &s](double t) {
        auto it = std::lower_bound(s.t.begin(), s.t.end(), t);
        std::size_t k = std::clamp<std::size_t>(static_cast<std::size_t>(it - s.t.begin()), 1, s.t.size() - 1);
        if (s.t[k - 1] == t) --k;
        if (s.t[k] == t) return ProfileJet{s.z[k], s.dz[k], ode.rhs(t, s.z[k], s.dz[k])};
        const double w = (t - s.t[k - 1]) / (s.t[k] - s.t[k - 1]);
        const double z = (1 - w) * s.z[k - 1] + w * s.z[k];
        const double dz = (1 - w) * s.dz[k - 1] + w * s.dz[k];
        return ProfileJet{z, dz, ode.rhs(t, z, dz)};
    };
}

}  // namespace

TEST_CASE("rk4 is fourth order")
{
    const ProfileODE ode = ProfileODE::revolution_non_isotropic();
    const IVPResult reference = integrate(ode, 1.0, 1.0, 0.3, 2.0, 4096);
    const IVPResult coarse = integrate(ode, 1.0, 1.0, 0.3, 2.0, 32);
    const IVPResult fine = integrate(ode, 1.0, 1.0, 0.3, 2.0, 64);
    const double e1 = std::abs(coarse.z.back() - reference.z.back());
    const double e2 = std::abs(fine.z.back() - reference.z.back());
    CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.15));
    CHECK(fine.t.back() == 2.0);
    CHECK(max_ode_residual(ode, reference) < 1e-8);
}

TEST_CASE("rk4 integrates backwards")
{
    const ProfileODE ode = ProfileODE::alpha_catenary(2.0, 0.5);
    const IVPResult fwd = integrate(ode, 0.0, 2.0, 0.1, 1.0, 400);
    const IVPResult back = integrate(ode, 1.0, fwd.z.back(), fwd.dz.back(), 0.0, 400);
    CHECK(back.z.back() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(back.dz.back() == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(max_ode_residual(ode, back) < 1e-6);
}

TEST_CASE("lines of slope one are non-isotropic catenaries")
{
    const IVPResult s = integrate(ProfileODE::alpha_catenary(1.0, 0.0), 0.0, 1.0, 1.0, 3.0, 30);
    for (std::size_t i = 0; i < s.t.size(); ++i) CHECK(s.z[i] == doctest::Approx(1.0 + s.t[i]).epsilon(1e-14));
}

TEST_CASE("ode errors")
{
    CHECK_THROWS_AS(ProfileODE::revolution_non_isotropic().rhs(1.0, 0.0, 0.0), Error);
    try {
        ProfileODE::alpha_catenary(1.0, 2.0).rhs(0.0, 2.0, 0.0);
        FAIL("expected SingularityEncountered");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularityEncountered);
    }
    CHECK_THROWS_AS(integrate(ProfileODE::revolution_non_isotropic(), -1.0, 1.0, 0.0, 1.0, 10), Error);
    CHECK_THROWS_AS(integrate(ProfileODE::revolution_non_isotropic(), 0.0, 1.0, 0.0, 1.0, 0), Error);
    CHECK_THROWS_AS(ProfileODE::parabolic_non_isotropic(1.0, 0.0, 0.0), Error);
    CHECK(ProfileODE::parabolic_non_isotropic(1.0, 1.0, 0.0).name() == "ParabolicNonIsotropic");
    // The line z = 0.05 - t reaches the axis inside the first step.
    CHECK_THROWS_AS(integrate(ProfileODE::alpha_catenary(1.0, 0.0), 0.0, 0.05, -1.0, 1.0, 10), Error);
}

TEST_CASE("profile equations agree with the geometric residuals")
{
    SUBCASE("non-isotropic alpha-catenaries")
    {
        for (double alpha : {1.0, 2.0}) {
            const ProfileODE ode = ProfileODE::alpha_catenary(alpha, 0.3);
            const IVPResult s = integrate(ode, 0.0, 2.0, -0.4, 1.0, 100);
            const PlaneCurve c = PlaneCurve::graph(node_profile(ode, s), 0.0, 1.0);
            for (std::size_t i = 0; i < s.t.size(); i += 7) {
                CHECK(std::abs(catenary_curvature_residual(c, LineReference::Lx, alpha, 0.3, s.t[i])) < 1e-12);
            }
        }
    }
    SUBCASE("revolution w.r.t. the plane z = 0")
    {
        const ProfileODE ode = ProfileODE::revolution_non_isotropic();
        const IVPResult s = integrate(ode, 0.5, 1.0, 0.2, 2.0, 90);
        const ParamSurface surface = make_revolution({node_profile(ode, s), 0.5, 2.0});
        for (std::size_t i = 0; i < s.t.size(); i += 9) {
            CHECK(std::abs(sms_residual(surface, {PlaneReference::Pi_xy}, s.t[i], 0.4)) < 1e-12);
        }
    }
    SUBCASE("parabolic revolution w.r.t. the plane z = 0")
    {
        for (double a : {0.0, 0.8}) {
            const double b = 1.4;
            const ProfileODE ode = ProfileODE::parabolic_non_isotropic(a, b, 0.0);
            const IVPResult s = integrate(ode, 1.0, 1.0, 0.1, 2.0, 50);
            ParabolicRevolutionSpec spec{a, b, 0.0, 0.0, 0.0, node_profile(ode, s), 1.0, 2.0, -0.5, 0.5};
            const ParamSurface surface = make_parabolic_revolution(spec);
            for (std::size_t i = 0; i < s.t.size(); i += 5) {
                for (double th : {-0.5, 0.0, 0.3}) {
                    CHECK(std::abs(sms_residual(surface, {PlaneReference::Pi_xy}, s.t[i], th)) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("rk shooting reproduces the discrete L_x critical curve")
{
    const WeightFunctionalSpec spec{LineReference::Lx, 1.0, 0.0};
    const auto r = minimize(spec, {0.0, 2.0, 1.0, 3.0}, 400);
    const auto& c = r.curve;
    const double h = c.t[1] - c.t[0];
    const double slope = (-3 * c.z[0] + 4 * c.z[1] - c.z[2]) / (2 * h);
    const IVPResult s = integrate(ProfileODE::alpha_catenary(1.0, 0.0), 0.0, 2.0, slope, 1.0, 400);
    for (std::size_t i = 0; i < c.t.size(); ++i) CHECK(s.z[i] == doctest::Approx(c.z[i]).epsilon(1e-4));
}

TEST_CASE("picard radius")
{
    const PicardRadius r = picard_radius(1.0);
    CHECK(r.epsilon == 0.5);
    CHECK(r.self_map == doctest::Approx(0.4));
    CHECK(r.lipschitz == doctest::Approx(6.0));
    CHECK(r.contraction == doctest::Approx(1.0 / 6.0));
    CHECK(r.radius == doctest::Approx(0.15));
    CHECK(picard_radius(0.5).radius == doctest::Approx(0.075));
    CHECK(picard_radius(2.0).radius == doctest::Approx(0.3));
    CHECK_THROWS_AS(picard_radius(0.0), Error);
}

TEST_CASE("operator T")
{
    SampledProfile z;
    for (int i = 0; i < 65; ++i) {
        z.t.push_back(0.1 * i / 64);
        z.z.push_back(1.0);
        z.dz.push_back(0.0);
    }
    // T applied to the constant a: z' = t/(4a), z = a + t^2/(8a).
    const SampledProfile tz = operator_T_apply(1.0, z);
    for (std::size_t i = 0; i < z.t.size(); ++i) {
        CHECK(tz.dz[i] == doctest::Approx(z.t[i] / 4).epsilon(1e-13));
        CHECK(tz.z[i] == doctest::Approx(1.0 + z.t[i] * z.t[i] / 8).epsilon(1e-13));
    }
    z.z[10] = 0.0;
    try {
        operator_T_apply(1.0, z);
        FAIL("expected DivisionByZero");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
}

TEST_CASE("degenerate initial value problem")
{
    for (double a : {0.5, 1.0, 2.0}) {
        CAPTURE(a);
        const IVPResult s = picard_solve_degenerate(a);
        CHECK(s.z.front() == a);
        CHECK(s.dz.front() == 0.0);
        REQUIRE(s.zpp_origin.has_value());
        CHECK(std::abs(*s.zpp_origin - 1 / (4 * a)) < 1e-6);
        for (double ratio : s.contraction_ratios) CHECK(ratio < 1.0);
        for (std::size_t i = 1; i < s.iterate_distances.size(); ++i) {
            CHECK(s.iterate_distances[i] < s.iterate_distances[i - 1]);
        }
        CHECK(s.ball_excursion <= s.epsilon);
        // Fixed point: one more application of T changes nothing.
        const SampledProfile again = operator_T_apply(a, {s.t, s.z, s.dz});
        for (std::size_t i = 0; i < s.t.size(); ++i) CHECK(std::abs(again.z[i] - s.z[i]) < 1e-11);
        // Taylor expansion at the axis: z = a + t^2/(8a) - 3 t^4/(512 a^3) + O(t^6).
        for (std::size_t i = 0; i < 64; ++i) {
            const double t = s.t[i];
            CHECK(std::abs(s.z[i] - a - t * t / (8 * a) + 3 * std::pow(t, 4) / (512 * a * a * a)) < 1e-10);
        }
        CHECK(max_ode_residual(ProfileODE::revolution_non_isotropic(), s) < 1e-6);
    }
}

TEST_CASE("rk continuation matches the picard solution on the overlap")
{
    for (double a : {0.5, 1.0, 2.0}) {
        const IVPResult p = picard_solve_degenerate(a);
        const double r = p.t.back();
        const IVPResult back = integrate(ProfileODE::revolution_non_isotropic(), r, p.z.back(), p.dz.back(), r / 2, 256);
        for (std::size_t k = 0; k < back.t.size(); ++k) {
            const std::size_t i = p.t.size() - 1 - k;
            CHECK(back.t[k] == doctest::Approx(p.t[i]).epsilon(1e-14));
            CHECK(std::abs(back.z[k] - p.z[i]) < 1e-7);
        }
        const IVPResult ahead = continue_with_rk(p, 3 * r, 200);
        CHECK(ahead.t.front() == r);
        CHECK(ahead.t.back() == doctest::Approx(3 * r));
        CHECK(max_ode_residual(ProfileODE::revolution_non_isotropic(), ahead) < 1e-6);
    }
}

TEST_CASE("picard failures")
{
    PicardOptions few;
    few.max_iter = 2;
    try {
        picard_solve_degenerate(1.0, few);
        FAIL("expected MaxIterExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MaxIterExceeded);
    }
    PicardOptions even;
    even.nodes = 10;
    CHECK_THROWS_AS(picard_solve_degenerate(1.0, even), Error);
    CHECK_THROWS_AS(picard_solve_degenerate(-1.0), Error);
}

TEST_CASE("solutions depend continuously on the initial height")
{
    const std::vector<double> as{1.0, 1.01, 1.001};
    const auto sols = continuity_in_a(as);
    REQUIRE(sols.size() == 3);
    CHECK(sols[0].a == 1.0);
    const double d1 = sup_difference(sols[0], sols[1]);
    const double d2 = sup_difference(sols[0], sols[2]);
    CHECK(d1 > 0.0);
    // Lipschitz in a with constant close to one near the axis.
    CHECK(d1 / 0.01 < 1.1);
    CHECK(d2 / 0.001 < 1.1);
    CHECK(d1 / d2 == doctest::Approx(10.0).epsilon(0.05));
    CHECK(interpolate_z(sols[0], 0.0) == 1.0);
    CHECK_THROWS_AS(interpolate_z(sols[0], 1.0), Error);
}
