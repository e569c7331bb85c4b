#include "armik/elbow_circle.hpp"

#include <algorithm>
#include <cmath>

namespace armik {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kBoundaryTol = 1e-9;

double wrap_angle(double t) {
    double w = std::fmod(t, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

}  // namespace

const char* reachability_name(Reachability r) {
    switch (r) {
        case Reachability::reachable: return "reachable";
        case Reachability::tangent_point: return "tangent_point";
        case Reachability::too_far: return "too_far";
        case Reachability::too_close: return "too_close";
        case Reachability::wrist_at_shoulder: return "wrist_at_shoulder";
    }
    return "unknown";
}

Reachability classify_reachability(const Vec3& wrist, const ArmGeometry& geom) {
    const double n = norm(wrist);
    if (n < kZeroTol) return Reachability::wrist_at_shoulder;
    const double lo = std::abs(geom.d1 - geom.d2);
    const double hi = geom.d1 + geom.d2;
    if (std::abs(n - hi) <= kBoundaryTol) return Reachability::tangent_point;
    // The inner boundary only exists for unequal link lengths; for
    // d1 == d2 two concentric-ish spheres still intersect properly.
    if (lo > kZeroTol && std::abs(n - lo) <= kBoundaryTol)
        return Reachability::tangent_point;
    if (n > hi) return Reachability::too_far;
    if (n < lo) return Reachability::too_close;
    return Reachability::reachable;
}

Plane intersection_plane(const Vec3& wrist, const ArmGeometry& geom) {
    const double m2 = norm2(wrist);
    if (m2 < kZeroTol * kZeroTol)
        throw DegenerateInput("intersection_plane: wrist at shoulder");
    return {wrist * 2.0, m2 + geom.d1 * geom.d1 - geom.d2 * geom.d2};
}

std::pair<Vec3, Vec3> circle_frame(const Vec3& wrist) {
    const Vec3 v1 = wrist * 2.0;
    if (std::hypot(wrist.x, wrist.y) > kZeroTol) {
        const Vec3 a1{-2.0 * wrist.y, 2.0 * wrist.x, 0.0};
        return {normalize(a1), normalize(cross(a1, v1))};
    }
    if (std::abs(wrist.z) > kZeroTol) {
        // Wrist on the Z axis: the swap-negate rule yields zero, so pick
        // the lateral axis and complete the frame by cross product.
        const Vec3 basis_a{1.0, 0.0, 0.0};
        return {basis_a, cross(basis_a, normalize(v1))};
    }
    throw DegenerateInput("circle_frame: wrist at shoulder");
}

std::pair<Vec3, double> circle_center(const Vec3& wrist, const ArmGeometry& geom) {
    const double m2 = norm2(wrist);
    if (m2 < kZeroTol * kZeroTol)
        throw DegenerateInput("circle_center: wrist at shoulder");
    const double beta =
        (geom.d1 * geom.d1 - geom.d2 * geom.d2 + m2) / (2.0 * m2);
    return {wrist * beta, beta};
}

double circle_radius(const Vec3& center, const ArmGeometry& geom) {
    const double d2 = norm2(center);
    const double r2 = geom.d1 * geom.d1 - d2;
    if (r2 < 0.0) {
        // A wrist within 1e-9 of the tangent boundary may spill r2 below
        // zero by ~2*d1*1e-9; anything past that is a real inconsistency.
        if (r2 < -10.0 * kBoundaryTol * geom.d1 * geom.d1)
            throw InternalInconsistency(
                "circle_radius: center farther than d1; wrist was not reachable");
        return 0.0;
    }
    return std::sqrt(r2);
}

RedundancyCircle make_circle(const WristPoint& wrist, const ArmGeometry& geom) {
    switch (classify_reachability(wrist.m, geom)) {
        case Reachability::wrist_at_shoulder:
            throw DegenerateInput("make_circle: wrist at shoulder");
        case Reachability::too_far:
        case Reachability::too_close:
            throw InternalInconsistency("make_circle: wrist not reachable");
        default:
            break;
    }
    RedundancyCircle circle;
    auto [center, beta] = circle_center(wrist.m, geom);
    circle.center = center;
    circle.beta = beta;
    circle.radius = circle_radius(center, geom);
    std::tie(circle.basis_a, circle.basis_b) = circle_frame(wrist.m);
    circle.plane = intersection_plane(wrist.m, geom);
    return circle;
}

Vec3 point_at(const RedundancyCircle& circle, double t) {
    return circle.center + circle.basis_a * (circle.radius * std::cos(t)) +
           circle.basis_b * (circle.radius * std::sin(t));
}

BodyHalfSpace right_body_halfspace() { return {{1.0, -1.0, 0.0}, 0.0}; }

// ---------------------------------------------------------------------------
// FeasibleArc

FeasibleArc FeasibleArc::full() {
    FeasibleArc arc;
    arc.arcs_ = {{0.0, kTwoPi}};
    return arc;
}

FeasibleArc FeasibleArc::empty() { return {}; }

FeasibleArc FeasibleArc::interval(double lo, double hi) {
    if (hi < lo) std::swap(lo, hi);
    const double length = hi - lo;
    if (length >= kTwoPi) return full();
    FeasibleArc arc;
    const double start = wrap_angle(lo);
    if (start + length <= kTwoPi) {
        arc.arcs_ = {{start, length}};
    } else {
        // Split at the 0/2pi seam; stored arcs never wrap.
        arc.arcs_ = {{0.0, start + length - kTwoPi}, {start, kTwoPi - start}};
    }
    arc.normalize();
    return arc;
}

void FeasibleArc::normalize() {
    std::sort(arcs_.begin(), arcs_.end(),
              [](const ArcInterval& a, const ArcInterval& b) { return a.start < b.start; });
    std::vector<ArcInterval> merged;
    for (const ArcInterval& a : arcs_) {
        if (!merged.empty() &&
            a.start <= merged.back().start + merged.back().length + 1e-15) {
            double end = std::max(merged.back().start + merged.back().length,
                                  a.start + a.length);
            merged.back().length = end - merged.back().start;
        } else {
            merged.push_back(a);
        }
    }
    arcs_ = std::move(merged);
}

bool FeasibleArc::is_full() const { return total_length() >= kTwoPi - 1e-12; }

double FeasibleArc::total_length() const {
    double sum = 0.0;
    for (const ArcInterval& a : arcs_) sum += a.length;
    return sum;
}

bool FeasibleArc::contains(double t, double tol) const {
    const double w = wrap_angle(t);
    for (const ArcInterval& a : arcs_) {
        // The wrapped value, and its two aliases across the 0/2pi seam.
        for (const double v : {w, w + kTwoPi, w - kTwoPi}) {
            if (v >= a.start - tol && v <= a.start + a.length + tol) return true;
        }
    }
    return false;
}

FeasibleArc FeasibleArc::intersect(const FeasibleArc& other) const {
    FeasibleArc out;
    for (const ArcInterval& a : arcs_) {
        for (const ArcInterval& b : other.arcs_) {
            const double lo = std::max(a.start, b.start);
            const double hi = std::min(a.start + a.length, b.start + b.length);
            if (hi >= lo) out.arcs_.push_back({lo, hi - lo});
        }
    }
    out.normalize();
    return out;
}

std::vector<ArcInterval> FeasibleArc::merged_arcs() const {
    std::vector<ArcInterval> merged = arcs_;
    if (merged.size() >= 2) {
        const ArcInterval& first = merged.front();
        ArcInterval& last = merged.back();
        if (first.start <= 1e-15 &&
            last.start + last.length >= kTwoPi - 1e-15 &&
            total_length() < kTwoPi - 1e-12) {
            last.length += first.length;  // joins across the seam
            merged.erase(merged.begin());
        }
    }
    std::sort(merged.begin(), merged.end(),
              [](const ArcInterval& a, const ArcInterval& b) {
                  return a.length > b.length;
              });
    return merged;
}

double FeasibleArc::midpoint() const {
    if (is_empty()) throw DegenerateInput("FeasibleArc::midpoint: empty arc");
    const ArcInterval longest = merged_arcs().front();
    return wrap_angle(longest.start + longest.length / 2.0);
}

std::vector<double> FeasibleArc::sample(int n) const {
    if (n < 2) throw DegenerateInput("FeasibleArc::sample: need n >= 2");
    if (is_empty()) throw DegenerateInput("FeasibleArc::sample: empty arc");
    std::vector<ArcInterval> ordered = merged_arcs();
    std::sort(ordered.begin(), ordered.end(),
              [](const ArcInterval& a, const ArcInterval& b) { return a.start < b.start; });
    const double total = total_length();
    std::vector<double> ts;
    ts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double s = total * static_cast<double>(i) / static_cast<double>(n - 1);
        double t = ordered.back().start + ordered.back().length;  // fallback: last endpoint
        for (const ArcInterval& a : ordered) {
            if (s <= a.length + 1e-12) {
                t = a.start + std::min(s, a.length);
                break;
            }
            s -= a.length;
        }
        ts.push_back(wrap_angle(t));
    }
    return ts;
}

// ---------------------------------------------------------------------------

namespace {

/// Solve normal . point_at(t) >= offset. The left side is
/// C + A cos t + B sin t, so the feasible set is one closed arc
/// centered on atan2(B, A).
FeasibleArc halfspace_arc(const RedundancyCircle& circle, const BodyHalfSpace& hs) {
    const double C = dot(hs.normal, circle.center) - hs.offset;
    const double A = circle.radius * dot(hs.normal, circle.basis_a);
    const double B = circle.radius * dot(hs.normal, circle.basis_b);
    const double R = std::hypot(A, B);
    if (R < 1e-15)
        return C >= -1e-15 ? FeasibleArc::full() : FeasibleArc::empty();
    const double x = -C / R;  // need cos(t - phi) >= x
    if (x <= -1.0) return FeasibleArc::full();
    if (x > 1.0) return FeasibleArc::empty();
    const double phi = std::atan2(B, A);
    const double half = std::acos(x);
    return FeasibleArc::interval(phi - half, phi + half);
}

}  // namespace

FeasibleArc feasible_arc(const RedundancyCircle& circle, const ArcConstraints& constraints) {
    FeasibleArc arc = FeasibleArc::full();
    if (constraints.body)
        arc = arc.intersect(halfspace_arc(circle, *constraints.body));
    if (constraints.roll_limit)
        arc = arc.intersect(
            FeasibleArc::interval(constraints.roll_limit->lo, constraints.roll_limit->hi));
    return arc;
}

}  // namespace armik
