#pragma once

#include <optional>

#include "armik/arm_model.hpp"
#include "armik/elbow_circle.hpp"
#include "armik/geom3.hpp"

namespace armik {

/// Hand-stage results, present only when the request carried a tip.
struct HandResult {
    double ang_muneca{0.0};  ///< hand orientation inputs, echoed for FK
    double ang_mano{0.0};
    std::optional<Plane> plane;  ///< absent when the arm is straight
    double alpha{0.0};
    double wrist_roll_total{kPi / 2.0};
    double hand_flex{0.0};
    bool roll_free{false};  ///< plane degenerate; alpha defaulted to 0
};

/// Full solver output: the seven joint values plus the sign flags the
/// arcsin/arccos extractions dropped, and the geometric witnesses.
struct JointSolution {
    double ang_hombro_z{0.0};
    double ang_hombro_x{0.0};
    double t{0.0};  ///< brazo_roll: the redundancy-circle parameter
    double ang_codo{0.0};
    std::optional<HandResult> hand;  ///< muneca (roll total) and mano (flex)
    double gripper{0.0};             ///< pinza: carried through, never solved

    bool elbow_y_negative{false};
    bool elbow_z_negative{true};  ///< default hemisphere: elbow below the shoulder
    int wrist_branch{+1};         ///< polar-branch sign for the wrist reconstruction

    Vec3 wrist;
    Vec3 elbow;
    RedundancyCircle circle;
};

/// Value of one joint, absent for muneca/mano when the hand stage did
/// not run.
inline std::optional<double> joint_value(const JointSolution& s, Joint j) {
    switch (j) {
        case Joint::hombro_z: return s.ang_hombro_z;
        case Joint::hombro_x: return s.ang_hombro_x;
        case Joint::brazo_roll: return s.t;
        case Joint::codo: return s.ang_codo;
        case Joint::muneca:
            return s.hand ? std::optional<double>(s.hand->wrist_roll_total)
                          : std::nullopt;
        case Joint::mano:
            return s.hand ? std::optional<double>(s.hand->hand_flex) : std::nullopt;
        case Joint::pinza: return s.gripper;
    }
    return std::nullopt;
}

}  // namespace armik
