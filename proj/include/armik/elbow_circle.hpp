#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "armik/arm_model.hpp"
#include "armik/decouple.hpp"
#include "armik/geom3.hpp"

namespace armik {

/// Existence classification for the intersection of the upper-arm sphere
/// (center shoulder, radius d1) and the forearm sphere (center wrist,
/// radius d2). Boundary cases use a 1e-9 tolerance in link units.
enum class Reachability {
    reachable,         ///< |d1-d2| < |m| < d1+d2: a proper circle exists
    tangent_point,     ///< |m| on a boundary: the circle degenerates to a point
    too_far,           ///< |m| > d1+d2
    too_close,         ///< |m| < |d1-d2|
    wrist_at_shoulder  ///< |m| ~ 0: every construction below degenerates
};

const char* reachability_name(Reachability r);

Reachability classify_reachability(const Vec3& wrist, const ArmGeometry& geom);

/// Pointwise difference of the two sphere equations: the plane holding
/// the intersection circle. With wrist (a,b,c) the coefficients are
/// normal (2a,2b,2c) and offset a^2+b^2+c^2 + d1^2-d2^2, kept literal.
Plane intersection_plane(const Vec3& wrist, const ArmGeometry& geom);

/// In-plane orthonormal frame. basis_a swaps the wrist's x,y and negates
/// one (then normalizes); basis_b is the normalized cross product
/// basis_a x (2a,2b,2c). When the wrist sits on the Z axis the swap
/// degenerates and the frame falls back to basis_a = (1,0,0),
/// basis_b = basis_a x normalize(wrist).
std::pair<Vec3, Vec3> circle_frame(const Vec3& wrist);

/// Circle center: intersection of the shoulder-to-wrist line with the
/// plane. Returns {center, beta} with center = beta * wrist.
std::pair<Vec3, double> circle_center(const Vec3& wrist, const ArmGeometry& geom);

/// Pythagorean radius sqrt(d1^2 - |center|^2). Throws
/// InternalInconsistency if |center| exceeds d1 beyond rounding; that
/// cannot happen once classify_reachability has passed.
double circle_radius(const Vec3& center, const ArmGeometry& geom);

/// One closed arc on the circle parameter: t in [start, start+length],
/// start normalized to [0, 2pi), length in [0, 2pi].
struct ArcInterval {
    double start{0.0};
    double length{0.0};
};

/// Subset of the circle parameter [0, 2pi) as a union of closed arcs.
class FeasibleArc {
  public:
    static FeasibleArc full();
    static FeasibleArc empty();
    /// Closed arc from lo to hi (hi >= lo); spans the full circle when
    /// hi - lo >= 2pi.
    static FeasibleArc interval(double lo, double hi);

    bool is_empty() const { return arcs_.empty(); }
    bool is_full() const;
    double total_length() const;
    bool contains(double t, double tol = 1e-12) const;

    FeasibleArc intersect(const FeasibleArc& other) const;

    /// Midpoint of the longest arc (arcs adjacent across the 0/2pi seam
    /// are joined first), normalized to [0, 2pi).
    double midpoint() const;

    /// n >= 2 parameters covering the arc set uniformly by measure,
    /// endpoints included.
    std::vector<double> sample(int n) const;

    /// Arcs merged across the seam, longest first.
    std::vector<ArcInterval> merged_arcs() const;
    const std::vector<ArcInterval>& arcs() const { return arcs_; }

  private:
    // Sorted by start, pairwise disjoint, none wrapping past 2pi except
    // the full-circle representation {0, 2pi}.
    std::vector<ArcInterval> arcs_;

    void normalize();
};

/// Half-space {p : normal . p >= offset} used to keep the elbow away
/// from the body.
struct BodyHalfSpace {
    Vec3 normal;
    double offset{0.0};

    bool contains(const Vec3& p, double tol = 1e-12) const {
        return dot(normal, p) - offset >= -tol;
    }
};

/// Default right-arm body model: a vertical plane through the shoulder
/// at 45 degrees between the lateral (+X) and forward (+Y) axes; the
/// elbow must stay on the lateral side. The exact body geometry is a
/// modeling choice; this plane is configurable per arm.
BodyHalfSpace right_body_halfspace();

struct ArcConstraints {
    std::optional<BodyHalfSpace> body;
    /// Direct limit on the roll parameter t, typically the brazo_roll
    /// joint's interval.
    std::optional<Interval> roll_limit;
};

/// The locus of valid elbow positions with everything needed to walk it.
struct RedundancyCircle {
    Vec3 center;
    double radius{0.0};
    Vec3 basis_a;
    Vec3 basis_b;
    Plane plane;
    double beta{0.0};
    FeasibleArc feasible_arc = FeasibleArc::full();
};

/// Assemble the full circle for a reachable (or tangent) wrist. The
/// feasible arc is initialized to the full circle; see feasible_arc().
RedundancyCircle make_circle(const WristPoint& wrist, const ArmGeometry& geom);

/// Parametric point: center + radius*(basis_a cos t + basis_b sin t).
Vec3 point_at(const RedundancyCircle& circle, double t);

/// Arc of parameters whose points satisfy every constraint. Half-space
/// bounds are solved analytically (the constraint is sinusoidal in t),
/// so returned endpoints are exact up to arithmetic rounding.
FeasibleArc feasible_arc(const RedundancyCircle& circle, const ArcConstraints& constraints);

}  // namespace armik
