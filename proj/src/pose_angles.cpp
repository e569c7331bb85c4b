#include "armik/pose_angles.hpp"

#include <cmath>

namespace armik {

namespace {
constexpr double kSpill = 1e-9;
}

ShoulderAngles shoulder_angles(const Vec3& elbow, const ArmGeometry& geom) {
    const double d1 = geom.d1;
    const double len = norm(elbow);
    if (std::abs(len - d1) > 1e-6 * std::max(1.0, d1))
        throw InternalInconsistency("shoulder_angles: elbow is not at distance d1");
    if (std::abs(elbow.z) > d1 + kSpill)
        throw InternalInconsistency("shoulder_angles: |codo_z| exceeds d1");

    ShoulderAngles out;
    out.cat_codo_z = std::sqrt(std::max(0.0, d1 * d1 - elbow.z * elbow.z));
    out.ang_hombro_z = std::asin(
        clamp_spill(out.cat_codo_z / d1, -1.0, 1.0, kSpill, "shoulder_angles: sine ratio"));
    out.hip_brazo_xy = std::hypot(elbow.x, elbow.y);
    if (out.hip_brazo_xy < kZeroTol) {
        out.ang_hombro_x = 0.0;  // azimuth undefined on the Z axis
    } else {
        out.ang_hombro_x = std::acos(clamp_spill(elbow.x / out.hip_brazo_xy, -1.0, 1.0,
                                                 kSpill, "shoulder_angles: cosine ratio"));
    }
    out.elbow_y_negative = elbow.y < 0.0;
    out.elbow_z_negative = elbow.z < 0.0;
    return out;
}

ElbowAngle elbow_angle(const Vec3& wrist, const RedundancyCircle& circle,
                       const ArmGeometry& geom) {
    const double mlen = norm(wrist);
    if (mlen < kZeroTol)
        throw DegenerateInput("elbow_angle: wrist at shoulder");
    // Signed positions along the shoulder-to-wrist axis: the center sits
    // at beta*|m|, the wrist at |m|.
    const double center_pos = circle.beta * mlen;
    const double wrist_gap = mlen - center_pos;

    ElbowAngle out;
    out.cat_brazo = std::abs(center_pos);
    out.cat_antebrazo = std::abs(wrist_gap);
    out.ang_codo_1 = std::asin(clamp_spill(center_pos / geom.d1, -1.0, 1.0, kSpill,
                                           "elbow_angle: cat_brazo exceeds d1"));
    out.ang_codo_2 = std::asin(clamp_spill(wrist_gap / geom.d2, -1.0, 1.0, kSpill,
                                           "elbow_angle: cat_antebrazo exceeds d2"));
    out.ang_codo = out.ang_codo_1 + out.ang_codo_2;
    return out;
}

ElbowAngle elbow_angle_from_legs(double cat_antebrazo, double cat_brazo,
                                 const ArmGeometry& geom) {
    ElbowAngle out;
    out.cat_antebrazo = cat_antebrazo;
    out.cat_brazo = cat_brazo;
    out.ang_codo_1 = std::asin(clamp_spill(cat_brazo / geom.d1, -1.0, 1.0, kSpill,
                                           "elbow_angle_from_legs: cat_brazo exceeds d1"));
    out.ang_codo_2 = std::asin(clamp_spill(cat_antebrazo / geom.d2, -1.0, 1.0, kSpill,
                                           "elbow_angle_from_legs: cat_antebrazo exceeds d2"));
    out.ang_codo = out.ang_codo_1 + out.ang_codo_2;
    return out;
}

Plane hand_plane(const Vec3& shoulder, const Vec3& elbow, const Vec3& circle_center) {
    try {
        return plane_from_points(shoulder, elbow, circle_center);
    } catch (const DegenerateInput&) {
        throw DegenerateHandPlane(
            "hand_plane: shoulder, elbow and circle center are collinear");
    }
}

WristRoll wrist_roll(const Vec3& tip, const Vec3& wrist, const Plane& plane,
                     double mount_offset) {
    const Vec3 direction = wrist - tip;
    if (norm(direction) < kZeroTol)
        throw DegenerateInput("wrist_roll: tip coincides with wrist");
    WristRoll out;
    out.alpha = line_plane_angle({tip, direction}, plane);
    out.total = mount_offset + out.alpha;
    return out;
}

double hand_flex(const Vec3& elbow, const Vec3& wrist, const Vec3& tip) {
    const Vec3 toward_elbow = elbow - wrist;
    const Vec3 toward_tip = tip - wrist;
    return vector_angle(toward_elbow, toward_tip);
}

}  // namespace armik
