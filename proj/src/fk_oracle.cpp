#include "armik/fk_oracle.hpp"

#include <cmath>

namespace armik {

namespace {
constexpr double kSpill = 1e-9;
}

FkPose fk(const JointSolution& solution, const ArmGeometry& geom) {
    if (!std::isfinite(solution.ang_hombro_z) || !std::isfinite(solution.ang_hombro_x) ||
        !std::isfinite(solution.t) || !std::isfinite(solution.ang_codo))
        throw DegenerateInput("fk: non-finite angles");
    if (!solution.hand)
        throw DegenerateInput("fk: solution has no hand orientation");

    const double d1 = geom.d1;
    const double d2 = geom.d2;
    const double ysign = solution.elbow_y_negative ? -1.0 : 1.0;
    const double zsign = solution.elbow_z_negative ? -1.0 : 1.0;

    FkPose pose;

    // Elbow: inverse of the shoulder-angle extraction.
    const double rho = d1 * std::sin(solution.ang_hombro_z);
    pose.elbow = {rho * std::cos(solution.ang_hombro_x),
                  ysign * rho * std::sin(solution.ang_hombro_x),
                  zsign * d1 * std::cos(solution.ang_hombro_z)};

    // Shoulder-wrist distance from the interior elbow angle.
    const double m2 =
        std::max(0.0, d1 * d1 + d2 * d2 - 2.0 * d1 * d2 * std::cos(solution.ang_codo));
    const double mlen = std::sqrt(m2);

    if (mlen < kZeroTol) {
        // Equal links folded flat: the wrist returns to the shoulder.
        pose.wrist = {0.0, 0.0, 0.0};
    } else {
        // The circle geometry depends only on |m|. Its center sits at
        // center_pos along the wrist direction v, and the elbow decomposes
        // in the orthonormal frame {v, a(v), b(v)} as
        //   E = center_pos * v + p * a + q * b,  p = r3 cos t, q = r3 sin t.
        // Writing v in spherical angles (theta, phi), a = (-sin phi, cos phi, 0)
        // and b = (cos theta cos phi, cos theta sin phi, -sin theta), so
        //   E_z = center_pos cos(theta) - q sin(theta) = Rz cos(theta + delta)
        // pins theta up to the recorded branch, and the XY components then
        // pin phi.
        const double beta = (d1 * d1 - d2 * d2 + m2) / (2.0 * m2);
        const double center_pos = beta * mlen;
        const double r3 =
            std::sqrt(std::max(0.0, d1 * d1 - center_pos * center_pos));
        const double p = r3 * std::cos(solution.t);
        const double q = r3 * std::sin(solution.t);

        const double rz = std::hypot(center_pos, q);
        double theta;
        if (rz < 1e-12) {
            // Center at the shoulder and sin(t) = 0: the elbow constrains
            // only the azimuth; take the equatorial wrist direction.
            theta = kPi / 2.0;
        } else {
            const double c = clamp_spill(pose.elbow.z / rz, -1.0, 1.0, kSpill,
                                         "fk: elbow inconsistent with ang_codo and t");
            const double branch = solution.wrist_branch < 0 ? -1.0 : 1.0;
            theta = branch * std::acos(c) - std::atan2(q, center_pos);
            // The two candidates on a branch differ by a full turn; exactly
            // one lands in [0, pi].
            if (theta < -kSpill) theta += 2.0 * kPi;
            theta = clamp_spill(theta, 0.0, kPi, kSpill, "fk: wrist polar angle out of range");
        }

        const double u = center_pos * std::sin(theta) + q * std::cos(theta);
        const double phi =
            std::atan2(pose.elbow.y, pose.elbow.x) - std::atan2(p, u);
        pose.wrist = {mlen * std::sin(theta) * std::cos(phi),
                      mlen * std::sin(theta) * std::sin(phi),
                      mlen * std::cos(theta)};
    }

    // Tip: the hand offsets applied in reverse.
    const double L = geom.long_mano;
    const double sm = std::sin(solution.hand->ang_muneca);
    pose.tip = {pose.wrist.x - L * sm * std::cos(solution.hand->ang_mano),
                pose.wrist.y - L * sm * std::sin(solution.hand->ang_mano),
                pose.wrist.z - L * std::cos(solution.hand->ang_muneca)};
    return pose;
}

}  // namespace armik
