#pragma once

#include "armik/arm_model.hpp"
#include "armik/elbow_circle.hpp"
#include "armik/geom3.hpp"

namespace armik {

/// Shoulder extraction from the elbow point. The two angles come from
/// right triangles on the elbow coordinates:
///   cat_codo_z   = sqrt(d1^2 - codo_z^2)      (leg opposite the Z axis)
///   ang_hombro_z = arcsin(cat_codo_z / d1)    (tilt from Z, in [0, pi/2])
///   hip_brazo_xy = sqrt(codo_x^2 + codo_y^2)  (XY projection length)
///   ang_hombro_x = arccos(codo_x / hip_brazo_xy)  (azimuth from X)
/// The arcsin/arccos forms drop the signs of codo_z and codo_y; the
/// hemisphere flags record them so the pose stays recoverable.
struct ShoulderAngles {
    double ang_hombro_z{0.0};
    double ang_hombro_x{0.0};
    double cat_codo_z{0.0};
    double hip_brazo_xy{0.0};
    bool elbow_y_negative{false};
    bool elbow_z_negative{false};
};

ShoulderAngles shoulder_angles(const Vec3& elbow, const ArmGeometry& geom);

/// Elbow interior angle split at the circle center:
///   ang_codo_1 = arcsin(cat_brazo / d1), ang_codo_2 = arcsin(cat_antebrazo / d2)
/// composed with the sign of the center's position along the
/// shoulder-to-wrist line, so the total matches the true interior angle
/// even when the center falls outside the segment between the sphere
/// centers (strongly unequal link lengths).
struct ElbowAngle {
    double ang_codo{0.0};
    double ang_codo_1{0.0};
    double ang_codo_2{0.0};
    double cat_antebrazo{0.0};  ///< |wrist - center|
    double cat_brazo{0.0};      ///< |center|
};

ElbowAngle elbow_angle(const Vec3& wrist, const RedundancyCircle& circle,
                       const ArmGeometry& geom);

/// The same staging fed with explicit non-negative leg lengths; valid
/// when the circle center lies between the sphere centers.
ElbowAngle elbow_angle_from_legs(double cat_antebrazo, double cat_brazo,
                                 const ArmGeometry& geom);

/// Plane through shoulder, elbow and circle center: perpendicular to the
/// hand-flex servo's motion. Collinear points (straight arm) throw
/// DegenerateHandPlane; the caller may then pick the roll freely.
Plane hand_plane(const Vec3& shoulder, const Vec3& elbow, const Vec3& circle_center);

struct WristRoll {
    double alpha{0.0};  ///< angle between the hand line and the plane, [0, pi/2]
    double total{0.0};  ///< mount offset + alpha
};

/// Total wrist-roll servo rotation: the plane's rest orientation is
/// offset from the hand line by the mount constant (default pi/2), plus
/// the line-plane angle.
WristRoll wrist_roll(const Vec3& tip, const Vec3& wrist, const Plane& plane,
                     double mount_offset = kPi / 2.0);

/// Hand flex: angle at the wrist between the vector toward the elbow and
/// the vector toward the tip, using the sign-keeping arccos, in [0, pi].
double hand_flex(const Vec3& elbow, const Vec3& wrist, const Vec3& tip);

}  // namespace armik
