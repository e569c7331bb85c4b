#pragma once

#include <optional>
#include <vector>

#include "armik/arm_model.hpp"
#include "armik/decouple.hpp"
#include "armik/elbow_circle.hpp"
#include "armik/solution.hpp"

namespace armik {

enum class ElbowPolicyKind { fixed_t, mid_arc, nearest_to_current };

struct ElbowPolicy {
    ElbowPolicyKind kind{ElbowPolicyKind::mid_arc};
    double fixed_t{0.0};  ///< used by fixed_t only, in [0, 2pi)

    static ElbowPolicy fixed(double t) { return {ElbowPolicyKind::fixed_t, t}; }
    static ElbowPolicy mid() { return {ElbowPolicyKind::mid_arc, 0.0}; }
    static ElbowPolicy nearest() { return {ElbowPolicyKind::nearest_to_current, 0.0}; }
};

inline constexpr int kDefaultNearestSamples = 256;

/// A solve may carry a full target (tip + hand orientation), a raw wrist
/// point, or both; with both, the wrist is used as-is and the tip only
/// drives the hand stages. At least one must be present.
struct SolveRequest {
    std::optional<TargetPose> target;
    std::optional<Vec3> wrist;
    std::optional<JointSolution> current;  ///< reference pose for nearest_to_current
    ElbowPolicy policy{};
    std::optional<BodyHalfSpace> body_constraint;
    int nearest_samples{kDefaultNearestSamples};
};

enum class SolveStatus { solved, infeasible, out_of_limits };

enum class FailReason {
    none,
    bad_request,       ///< neither target nor wrist given
    degenerate_input,  ///< a stage rejected its inputs (non-finite, coincident points)
    too_far,
    too_close,
    wrist_at_shoulder,
    no_valid_elbow,    ///< feasible arc empty under the constraints
    policy_violation,  ///< fixed t outside the arc, or nearest without a current pose
};

const char* solve_status_name(SolveStatus s);
const char* fail_reason_name(FailReason r);

struct LimitViolation {
    Joint joint;
    double value;
    Interval limit;
};

/// Diagnostics fill in stage order: a failure at stage k leaves every
/// later field absent.
struct SolveReport {
    SolveStatus status{SolveStatus::infeasible};
    FailReason reason{FailReason::none};
    std::optional<Reachability> reachability;
    std::optional<RedundancyCircle> circle;  ///< feasible arc attached
    std::optional<JointSolution> solution;   ///< present for solved and out_of_limits
    std::vector<LimitViolation> violations;
};

/// Violations of the closed per-joint intervals; empty means valid.
/// Joints the solution does not carry (muneca/mano without a hand stage)
/// are skipped.
std::vector<LimitViolation> validate_limits(const JointSolution& solution,
                                            const JointLimits& limits);

/// Pick a parameter on the circle's feasible arc.
///   fixed_t: the given t if the arc contains it, else PolicyViolation.
///   mid_arc: midpoint of the longest arc.
///   nearest_to_current: minimizer of the squared joint-angle distance
///     to `current`, found on a uniform grid of `samples` points and
///     refined by golden-section search to 1e-6 rad.
double select_elbow(const RedundancyCircle& circle, const WristPoint& wrist,
                    const ArmGeometry& geom, const ElbowPolicy& policy,
                    const std::optional<JointSolution>& current = std::nullopt,
                    const std::optional<TargetPose>& hand_target = std::nullopt,
                    int samples = kDefaultNearestSamples);

/// Extract the full solution for one elbow parameter. Exposed for sweeps
/// over the redundancy family; solve() composes it with selection and
/// limit validation.
JointSolution extract_solution(double t, const WristPoint& wrist,
                               const RedundancyCircle& circle, const ArmGeometry& geom,
                               const std::optional<TargetPose>& hand_target,
                               double gripper = 0.0);

/// End-to-end pipeline: wrist resolution, reachability, circle, feasible
/// arc, elbow selection, angle extraction, limit validation. Failures
/// are data, never exceptions. Under nearest_to_current, grid candidates
/// are retried in distance order when the nearest pose violates limits;
/// the other policies report out_of_limits directly.
SolveReport solve(const SolveRequest& request, const ArmGeometry& geom,
                  const JointLimits& limits);

}  // namespace armik
