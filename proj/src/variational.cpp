#include "isokit/variational.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "detail.hpp"
#include "isokit/error.hpp"

namespace isokit {

namespace {

struct Weight {
    double value = 0.0;  // base^alpha - lambda
    double d1 = 0.0;     // derivative w.r.t. z
    double d2 = 0.0;
};

Weight weight(const WeightFunctionalSpec& spec, double t, double z)
{
    const double a = spec.alpha;
    if (spec.reference == LineReference::Lz) {
        return {detail::real_power(t, a) - spec.lambda, 0.0, 0.0};
    }
    Weight w;
    w.value = detail::real_power(z, a) - spec.lambda;
    w.d1 = a == 0.0 ? 0.0 : a * detail::real_power(z, a - 1.0);
    w.d2 = (a == 0.0 || a == 1.0) ? 0.0 : a * (a - 1.0) * detail::real_power(z, a - 2.0);
    return w;
}

// Arc-length factor Q(s) with s the cell slope, and its derivatives.
struct Arc {
    double q, dq, ddq;
};

Arc arc(ArcMeasure measure, double s)
{
    if (measure == ArcMeasure::Isotropic) return {1.0, 0.0, 0.0};
    return {0.5 + 0.5 * s * s, s, 1.0};
}

void check_curve(const DiscreteCurve& c)
{
    if (c.t.size() < 2 || c.t.size() != c.z.size()) {
        fail(ErrorCode::InvalidInterval, "discrete curve needs >= 2 nodes of matching size");
    }
    for (std::size_t i = 1; i < c.t.size(); ++i) {
        if (!(c.t[i] > c.t[i - 1])) fail(ErrorCode::InvalidInterval, "grid must be strictly increasing");
    }
}

struct Cell {
    double h;
    Weight wa, wb;
    Arc q;
};

Cell cell(const WeightFunctionalSpec& spec, const DiscreteCurve& c, std::size_t i)
{
    const double h = c.t[i + 1] - c.t[i];
    const double s = (c.z[i + 1] - c.z[i]) / h;
    return {h, weight(spec, c.t[i], c.z[i]), weight(spec, c.t[i + 1], c.z[i + 1]), arc(spec.measure, s)};
}

double norm2(const std::vector<double>& v)
{
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Thomas algorithm for a symmetric tridiagonal system; nullopt on a zero pivot.
std::optional<std::vector<double>> solve_tridiagonal(const TridiagonalHessian& m,
                                                     const std::vector<double>& rhs)
{
    const std::size_t n = rhs.size();
    std::vector<double> c(n, 0.0), d(n, 0.0);
    double pivot = m.diagonal[0];
    if (std::abs(pivot) < 1e-300) return std::nullopt;
    if (n > 1) c[0] = m.off_diagonal[0] / pivot;
    d[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = m.diagonal[i] - m.off_diagonal[i - 1] * c[i - 1];
        if (std::abs(pivot) < 1e-300 || !std::isfinite(pivot)) return std::nullopt;
        if (i + 1 < n) c[i] = m.off_diagonal[i] / pivot;
        d[i] = (rhs[i] - m.off_diagonal[i - 1] * d[i - 1]) / pivot;
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

template <class F>
auto guarded(F&& f) -> std::optional<decltype(f())>
{
    try {
        auto v = f();
        return v;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DomainError) return std::nullopt;
        throw;
    }
}

}  // namespace

DiscreteCurve DiscreteCurve::linear(double t_a, double z_a, double t_b, double z_b, int n)
{
    if (n < 2) fail(ErrorCode::InvalidInterval, "need at least 2 cells");
    if (!(t_a < t_b)) fail(ErrorCode::InvalidInterval, "endpoints require t_a < t_b");
    DiscreteCurve c;
    c.t.resize(n + 1);
    c.z.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double f = static_cast<double>(i) / n;
        c.t[i] = i == n ? t_b : t_a + f * (t_b - t_a);
        c.z[i] = i == n ? z_b : z_a + f * (z_b - z_a);
    }
    return c;
}

double evaluate_functional(const WeightFunctionalSpec& spec, const DiscreteCurve& curve)
{
    check_curve(curve);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < curve.t.size(); ++i) {
        const Cell k = cell(spec, curve, i);
        total += 0.5 * k.h * (k.wa.value + k.wb.value) * k.q.q;
    }
    return total;
}

std::vector<double> functional_gradient(const WeightFunctionalSpec& spec, const DiscreteCurve& curve)
{
    check_curve(curve);
    const std::size_t n = curve.t.size() - 1;
    std::vector<double> full(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Cell k = cell(spec, curve, i);
        const double wsum = k.wa.value + k.wb.value;
        full[i] += 0.5 * k.h * k.wa.d1 * k.q.q - 0.5 * wsum * k.q.dq;
        full[i + 1] += 0.5 * k.h * k.wb.d1 * k.q.q + 0.5 * wsum * k.q.dq;
    }
    return {full.begin() + 1, full.end() - 1};
}

TridiagonalHessian functional_hessian(const WeightFunctionalSpec& spec, const DiscreteCurve& curve)
{
    check_curve(curve);
    const std::size_t n = curve.t.size() - 1;
    std::vector<double> diag(n + 1, 0.0), off(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Cell k = cell(spec, curve, i);
        const double wsum = k.wa.value + k.wb.value;
        const double stiff = 0.5 * wsum * k.q.ddq / k.h;
        diag[i] += 0.5 * k.h * k.wa.d2 * k.q.q - k.wa.d1 * k.q.dq + stiff;
        diag[i + 1] += 0.5 * k.h * k.wb.d2 * k.q.q + k.wb.d1 * k.q.dq + stiff;
        off[i] += 0.5 * (k.wa.d1 - k.wb.d1) * k.q.dq - stiff;
    }
    TridiagonalHessian h;
    if (n >= 2) {
        h.diagonal.assign(diag.begin() + 1, diag.end() - 1);
        h.off_diagonal.assign(off.begin() + 1, off.end() - 1);
    }
    return h;
}

MinimizeResult minimize(const WeightFunctionalSpec& spec, const Endpoints& endpoints, int n,
                        const MinimizeOptions& options)
{
    MinimizeResult result;
    result.curve = DiscreteCurve::linear(endpoints.t_a, endpoints.z_a, endpoints.t_b, endpoints.z_b, n);
    DiscreteCurve& curve = result.curve;
    const double tol = options.tol_factor * n;

    std::vector<double> g = functional_gradient(spec, curve);
    double gnorm = norm2(g);

    auto with_step = [&](const std::vector<double>& dir, double step) {
        DiscreteCurve trial = curve;
        for (std::size_t j = 0; j < dir.size(); ++j) trial.z[j + 1] += step * dir[j];
        return trial;
    };

    int it = 0;
    for (; it < options.max_iter && gnorm >= tol; ++it) {
        bool accepted = false;

        const auto step = solve_tridiagonal(functional_hessian(spec, curve), g);
        if (step) {
            std::vector<double> dir(step->size());
            for (std::size_t j = 0; j < dir.size(); ++j) dir[j] = -(*step)[j];
            double lambda = 1.0;
            for (int k = 0; k < 40 && !accepted; ++k, lambda *= 0.5) {
                DiscreteCurve trial = with_step(dir, lambda);
                auto tg = guarded([&] { return functional_gradient(spec, trial); });
                if (!tg) continue;
                double tn = norm2(*tg);
                if (tn < gnorm) {
                    curve = std::move(trial);
                    g = std::move(*tg);
                    gnorm = tn;
                    accepted = true;
                }
            }
        }

        if (!accepted) {
            // Backtracking steepest descent on the functional itself.
            ++result.descent_fallbacks;
            const double f0 = evaluate_functional(spec, curve);
            std::vector<double> dir(g.size());
            for (std::size_t j = 0; j < g.size(); ++j) dir[j] = -g[j];
            double lambda = 1.0;
            for (int k = 0; k < 60 && !accepted; ++k, lambda *= 0.5) {
                DiscreteCurve trial = with_step(dir, lambda);
                auto tf = guarded([&] { return evaluate_functional(spec, trial); });
                if (!tf || !(*tf < f0 - 1e-4 * lambda * gnorm * gnorm)) continue;
                curve = std::move(trial);
                g = functional_gradient(spec, curve);
                gnorm = norm2(g);
                accepted = true;
            }
        }

        if (!accepted) break;
    }

    result.iterations = it;
    result.gradient_norm = gnorm;
    result.functional = evaluate_functional(spec, curve);
    if (!(gnorm < tol)) {
        fail(ErrorCode::NoConvergence, "minimize stalled with gradient norm " + std::to_string(gnorm) +
                                           " after " + std::to_string(it) + " iterations");
    }
    return result;
}

double el_residual(const WeightFunctionalSpec& spec, const Profile& profile, double t)
{
    const ProfileJet p = profile(t);
    const double a = spec.alpha;
    if (spec.reference == LineReference::Lz) {
        const double lower = a == 0.0 ? 0.0 : a * detail::real_power(t, a - 1.0) * p.dz;
        return lower + (detail::real_power(t, a) - spec.lambda) * p.ddz;
    }
    const double force = a == 0.0 ? 0.0 : a * detail::real_power(p.z, a - 1.0) * (0.5 - 0.5 * p.dz * p.dz);
    return (detail::real_power(p.z, a) - spec.lambda) * p.ddz - force;
}

std::vector<LambdaSweepEntry> lambda_sweep(WeightFunctionalSpec spec, const Endpoints& endpoints,
                                           int n, const std::vector<double>& lambdas,
                                           const MinimizeOptions& options)
{
    std::vector<LambdaSweepEntry> out;
    out.reserve(lambdas.size());
    for (double lambda : lambdas) {
        spec.lambda = lambda;
        LambdaSweepEntry e;
        e.lambda = lambda;
        e.result = minimize(spec, endpoints, n, options);
        const DiscreteCurve& c = e.result.curve;
        for (std::size_t i = 0; i + 1 < c.t.size(); ++i) {
            const double h = c.t[i + 1] - c.t[i];
            const double s = (c.z[i + 1] - c.z[i]) / h;
            e.relative_length += h * arc(spec.measure, s).q;
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace isokit
