#include "isokit/quadrature.hpp"

#include "isokit/error.hpp"

namespace isokit {

double simpson(const std::function<double(double)>& f, double a, double b, int panels)
{
    if (panels < 2) panels = 2;
    if (panels % 2 != 0) ++panels;
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    }
    return sum * h / 3.0;
}

double simpson2d(const std::function<double(double, double)>& f, double u0, double u1,
                 double v0, double v1, int panels_u, int panels_v)
{
    auto inner = [&](double u) {
        return simpson([&](double v) { return f(u, v); }, v0, v1, panels_v);
    };
    return simpson(inner, u0, u1, panels_u);
}

std::vector<double> cumulative_simpson(std::span<const double> values, double h)
{
    const std::size_t n = values.size();
    if (n < 3) fail(ErrorCode::InvalidInterval, "cumulative_simpson needs at least 3 samples");
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 2; i < n; i += 2) {
        out[i] = out[i - 2] + h / 3.0 * (values[i - 2] + 4.0 * values[i - 1] + values[i]);
    }
    for (std::size_t i = 1; i < n; i += 2) {
        if (i + 1 < n) {
            // Quadratic through (i-1, i, i+1) integrated over [t_{i-1}, t_i].
            out[i] = out[i - 1] + h / 12.0 * (5.0 * values[i - 1] + 8.0 * values[i] - values[i + 1]);
        } else {
            // Last node of an even-length grid: quadratic through (i-2, i-1, i) over [t_{i-1}, t_i].
            out[i] = out[i - 1] + h / 12.0 * (-values[i - 2] + 8.0 * values[i - 1] + 5.0 * values[i]);
        }
    }
    return out;
}

}  // namespace isokit
