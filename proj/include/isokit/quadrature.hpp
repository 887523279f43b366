#pragma once

#include <functional>
#include <span>
#include <vector>

namespace isokit {

inline constexpr int kDefaultCurvePanels = 256;
inline constexpr int kDefaultSurfacePanels = 128;

/// Composite Simpson rule on [a, b]; odd panel counts are rounded up.
double simpson(const std::function<double(double)>& f, double a, double b,
               int panels = kDefaultCurvePanels);

/// Tensor-product composite Simpson rule on [u0,u1] x [v0,v1].
double simpson2d(const std::function<double(double, double)>& f, double u0, double u1,
                 double v0, double v1, int panels_u = kDefaultSurfacePanels,
                 int panels_v = kDefaultSurfacePanels);

/// Running integral F(t_i) = int_{t_0}^{t_i} f on a uniform grid of spacing h.
/// Even nodes use composite Simpson; odd nodes add one panel of the
/// quadratic through the neighbouring three samples. Needs >= 3 samples.
std::vector<double> cumulative_simpson(std::span<const double> values, double h);

}  // namespace isokit
