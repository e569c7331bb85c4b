#pragma once

#include "armik/arm_model.hpp"
#include "armik/geom3.hpp"
#include "armik/solution.hpp"

namespace armik {

/// Points reconstructed from joint angles alone.
struct FkPose {
    Vec3 elbow;
    Vec3 wrist;
    Vec3 tip;
};

/// Forward kinematics over the solver's angle conventions, used to
/// verify solutions by round trip. Only the angles and sign flags of the
/// solution are read, never its witness points.
///
/// The elbow comes straight from the shoulder angles. The wrist is
/// recovered in closed form: ang_codo fixes the shoulder-wrist distance
/// (law of cosines), which fixes the circle center and radius, and the
/// elbow's position at parameter t then pins the wrist direction up to
/// the recorded polar branch. The tip applies the hand-orientation
/// offsets in reverse.
///
/// Conventions for information the angles genuinely lose: with the elbow
/// on the vertical axis the whole arm may spin freely, and fk returns
/// the canonical azimuth; with ang_codo = 0 and d1 = d2 the wrist folds
/// back onto the shoulder (the rest pose for all-zero angles is elbow
/// (0,0,-d1), wrist at the shoulder, tip hanging by the hand offsets).
///
/// Requires the hand echo (ang_muneca/ang_mano) to place the tip.
FkPose fk(const JointSolution& solution, const ArmGeometry& geom);

}  // namespace armik
