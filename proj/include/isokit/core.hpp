#pragma once

#include <algorithm>
#include <cmath>

// Vector algebra of the simply isotropic plane I2 and space I3. The z
// component is always the isotropic direction.

namespace isokit {

struct IsoVec2 {
    double x = 0.0;
    double z = 0.0;

    friend constexpr IsoVec2 operator+(IsoVec2 a, IsoVec2 b) { return {a.x + b.x, a.z + b.z}; }
    friend constexpr IsoVec2 operator-(IsoVec2 a, IsoVec2 b) { return {a.x - b.x, a.z - b.z}; }
    friend constexpr IsoVec2 operator*(double s, IsoVec2 a) { return {s * a.x, s * a.z}; }
    friend constexpr bool operator==(IsoVec2, IsoVec2) = default;
};

struct IsoVec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr IsoVec3 operator+(IsoVec3 a, IsoVec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr IsoVec3 operator-(IsoVec3 a, IsoVec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr IsoVec3 operator-(IsoVec3 a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr IsoVec3 operator*(double s, IsoVec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend constexpr bool operator==(IsoVec3, IsoVec3) = default;
};

/// Degenerate isotropic metric <u,v> = u1 v1 + u2 v2.
constexpr double iso_dot(IsoVec3 u, IsoVec3 v) { return u.x * v.x + u.y * v.y; }
constexpr double iso_dot(IsoVec2 u, IsoVec2 v) { return u.x * v.x; }

/// Secondary metric <<u,v>> = u3 v3, meaningful on isotropic vectors.
constexpr double sec_dot(IsoVec3 u, IsoVec3 v) { return u.z * v.z; }
constexpr double sec_dot(IsoVec2 u, IsoVec2 v) { return u.z * v.z; }

constexpr IsoVec3 top_view(IsoVec3 u) { return {u.x, u.y, 0.0}; }

inline double iso_norm(IsoVec3 u) { return std::sqrt(iso_dot(u, u)); }
inline double iso_norm(IsoVec2 u) { return std::abs(u.x); }

constexpr double euclid_dot(IsoVec3 u, IsoVec3 v) { return u.x * v.x + u.y * v.y + u.z * v.z; }
constexpr double euclid_dot(IsoVec2 u, IsoVec2 v) { return u.x * v.x + u.z * v.z; }

constexpr IsoVec3 euclid_cross(IsoVec3 u, IsoVec3 v)
{
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

/// det(a, b) of two plane vectors taken as columns.
constexpr double det(IsoVec2 a, IsoVec2 b) { return a.x * b.z - a.z * b.x; }

/// det(a, b, c) of three space vectors taken as columns.
constexpr double det(IsoVec3 a, IsoVec3 b, IsoVec3 c) { return euclid_dot(a, euclid_cross(b, c)); }

/// Absolute tolerance 1e-12 scaled by the operand magnitude (at least 1).
inline bool approx_equal(double a, double b, double tol = 1e-12)
{
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

}  // namespace isokit
