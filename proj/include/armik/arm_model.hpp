#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "armik/geom3.hpp"

namespace armik {

/// The seven actuated joints, in solver order. `brazo_roll` is the
/// upper-arm roll whose value is the redundancy parameter t; `pinza` is
/// the gripper, carried through but never solved.
enum class Joint : int {
    hombro_z = 0,
    hombro_x = 1,
    brazo_roll = 2,
    codo = 3,
    muneca = 4,
    mano = 5,
    pinza = 6,
};

inline constexpr int kJointCount = 7;

constexpr std::array<Joint, kJointCount> all_joints() {
    return {Joint::hombro_z, Joint::hombro_x, Joint::brazo_roll, Joint::codo,
            Joint::muneca,   Joint::mano,     Joint::pinza};
}

const char* joint_name(Joint j);
std::optional<Joint> joint_from_name(std::string_view name);

/// Closed interval [lo, hi] in radians.
struct Interval {
    double lo{0.0};
    double hi{kPi};

    bool contains(double v) const { return v >= lo && v <= hi; }
    constexpr bool operator==(const Interval&) const = default;
};

/// Per-joint limits. Every joint defaults to [0, pi]: a standard servo's
/// 180 degree travel.
struct JointLimits {
    std::array<Interval, kJointCount> intervals{};

    Interval& operator[](Joint j) { return intervals[static_cast<int>(j)]; }
    const Interval& operator[](Joint j) const { return intervals[static_cast<int>(j)]; }
    constexpr bool operator==(const JointLimits&) const = default;
};

/// Link lengths of the arm. The shoulder is the origin of the solver
/// frame (X lateral, Y forward, Z vertical).
struct ArmGeometry {
    double d1{0.0};         ///< upper arm, shoulder to elbow
    double d2{0.0};         ///< forearm, elbow to wrist
    double long_mano{0.0};  ///< hand, wrist to tip

    static constexpr Vec3 shoulder_origin() { return {0.0, 0.0, 0.0}; }
    constexpr bool operator==(const ArmGeometry&) const = default;
};

/// Desired hand pose: tip position plus the two hand-orientation angles.
/// ang_muneca is the polar angle from +Z, ang_mano the azimuth from +X.
struct TargetPose {
    Vec3 tip;
    double ang_muneca{0.0};
    double ang_mano{0.0};
};

struct ArmConfig {
    ArmGeometry geometry;
    JointLimits limits;
};

/// Parse and validate a JSON configuration document.
///
/// Required keys: d1, d2, long_mano (all > 0). Optional: limits, an
/// object mapping joint names to [lo, hi] pairs in radians; omitted
/// joints default to [0, pi]. Throws ConfigError naming the offending
/// key on any problem.
ArmConfig load_config_text(const std::string& json_text);
ArmConfig load_config_file(const std::string& path);

/// Serialize back to JSON; load_config_text(save_config(c)) == c.
std::string save_config(const ArmConfig& config);

}  // namespace armik
