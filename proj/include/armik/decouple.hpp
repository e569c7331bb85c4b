#pragma once

#include <optional>

#include "armik/arm_model.hpp"
#include "armik/geom3.hpp"

namespace armik {

/// Wrist position. When produced by wrist_from_target the point lies on
/// the sphere of radius long_mano around the source tip; a raw wrist
/// carries no source and makes no such promise.
struct WristPoint {
    Vec3 m;
    std::optional<TargetPose> source;

    static WristPoint raw(const Vec3& m) { return {m, std::nullopt}; }
};

/// Stage one of the kinematic decoupling: place the wrist from the tip
/// point and the hand orientation angles.
///
///   Mx = Px + long_mano * sin(ang_muneca) * cos(ang_mano)
///   My = Py + long_mano * sin(ang_muneca) * sin(ang_mano)
///   Mz = Pz + long_mano * cos(ang_muneca)
///
/// Total for any finite angles; range checks happen at limit validation.
inline WristPoint wrist_from_target(const TargetPose& target, const ArmGeometry& geom) {
    if (!is_finite(target.tip) || !std::isfinite(target.ang_muneca) ||
        !std::isfinite(target.ang_mano))
        throw DegenerateInput("wrist_from_target: non-finite target");
    const double L = geom.long_mano;
    const double sm = std::sin(target.ang_muneca);
    const Vec3 m{target.tip.x + L * sm * std::cos(target.ang_mano),
                 target.tip.y + L * sm * std::sin(target.ang_mano),
                 target.tip.z + L * std::cos(target.ang_muneca)};
    return {m, target};
}

}  // namespace armik
