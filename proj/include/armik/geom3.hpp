#pragma once

#include <cmath>

#include "armik/errors.hpp"

namespace armik {

/// Norm below which a vector counts as zero. Link lengths are O(1)-O(10)
/// in this library's units.
inline constexpr double kZeroTol = 1e-9;

inline constexpr double kPi = 3.14159265358979323846;

struct Vec3 {
    double x{0.0}, y{0.0}, z{0.0};

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }

    constexpr bool operator==(const Vec3& o) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

constexpr double norm2(const Vec3& v) { return dot(v, v); }

inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

inline Vec3 normalize(const Vec3& v) {
    const double n = norm(v);
    if (n < kZeroTol) throw DegenerateInput("normalize: zero-length vector");
    return v / n;
}

/// Clamp x into [lo, hi] when it spilled at most `slack` outside; beyond
/// that the spill is a real inconsistency, not floating-point noise.
inline double clamp_spill(double x, double lo, double hi, double slack,
                          const char* what) {
    if (x < lo - slack || x > hi + slack)
        throw InternalInconsistency(what);
    return x < lo ? lo : (x > hi ? hi : x);
}

/// Plane stored as normal . p = offset. The normal is kept exactly as
/// constructed (not unit length) so test fixtures can state literal
/// coefficients; use normalized() or plane_equivalent() for comparisons.
struct Plane {
    Vec3 normal;
    double offset{0.0};

    double eval(const Vec3& p) const { return dot(normal, p) - offset; }

    /// Scale-canonical form: unit normal, offset divided accordingly.
    Plane normalized() const {
        const double n = norm(normal);
        if (n < kZeroTol) throw DegenerateInput("Plane::normalized: zero normal");
        return {normal / n, offset / n};
    }
};

/// True when the two planes describe the same point set (coefficients
/// proportional by a positive or negative factor).
inline bool plane_equivalent(const Plane& a, const Plane& b, double tol = 1e-9) {
    Plane an = a.normalized();
    Plane bn = b.normalized();
    const double sign = dot(an.normal, bn.normal) < 0.0 ? -1.0 : 1.0;
    Vec3 dn = an.normal - bn.normal * sign;
    return norm(dn) <= tol && std::abs(an.offset - bn.offset * sign) <= tol;
}

struct Line3 {
    Vec3 origin;
    Vec3 direction;
};

/// Plane through three non-collinear points; normal = (p2-p1) x (p3-p1).
inline Plane plane_from_points(const Vec3& p1, const Vec3& p2, const Vec3& p3) {
    const Vec3 e1 = p2 - p1;
    const Vec3 e2 = p3 - p1;
    const Vec3 n = cross(e1, e2);
    if (norm(n) <= kZeroTol * std::max(1.0, norm(e1) * norm(e2)))
        throw DegenerateInput("plane_from_points: collinear points");
    return {n, dot(n, p1)};
}

/// Angle between a line and a plane, in [0, pi/2]:
/// arcsin(|d . n| / (|d| |n|)). Invariant under rescaling of either input.
inline double line_plane_angle(const Line3& line, const Plane& plane) {
    const double dn = norm(line.direction);
    const double nn = norm(plane.normal);
    if (dn < kZeroTol) throw DegenerateInput("line_plane_angle: zero direction");
    if (nn < kZeroTol) throw DegenerateInput("line_plane_angle: zero normal");
    const double ratio = std::abs(dot(line.direction, plane.normal)) / (dn * nn);
    return std::asin(std::min(ratio, 1.0));
}

/// Angle between two vectors in [0, pi], keeping the sign of the dot
/// product: arccos(u . v / (|u| |v|)).
inline double vector_angle(const Vec3& u, const Vec3& v) {
    const double nu = norm(u);
    const double nv = norm(v);
    if (nu < kZeroTol || nv < kZeroTol)
        throw DegenerateInput("vector_angle: zero vector");
    const double c = dot(u, v) / (nu * nv);
    return std::acos(std::max(-1.0, std::min(1.0, c)));
}

/// Angle variant that drops the sign of the dot product, in [0, pi/2].
inline double vector_angle_absolute(const Vec3& u, const Vec3& v) {
    const double a = vector_angle(u, v);
    return a > kPi / 2.0 ? kPi - a : a;
}

inline double deg(double radians) { return radians * 180.0 / kPi; }
inline double rad(double degrees) { return degrees * kPi / 180.0; }

}  // namespace armik
