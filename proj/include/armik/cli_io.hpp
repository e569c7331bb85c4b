#pragma once

#include <optional>
#include <string>
#include <vector>

#include "armik/solver.hpp"

namespace armik {

/// One line of a batch input file. Exactly one of {tip + hand angles,
/// raw wrist} must be present.
struct BatchRecord {
    std::string id;
    std::optional<TargetPose> target;
    std::optional<Vec3> wrist;
    std::optional<ElbowPolicy> policy;  ///< per-row override
};

/// Single-solve report as a JSON document (schema_version 1). Angle
/// values appear twice, in radians and degrees; absent stages are
/// omitted entirely.
std::string report_to_json(const SolveReport& report);

/// Batch CSV input. Header row required; recognized columns:
///   id, wrist_x, wrist_y, wrist_z,
///   tip_x, tip_y, tip_z, ang_muneca, ang_mano,
///   policy (fixed|mid), elbow_t
/// Unknown headers are rejected. Rows that do not parse or violate the
/// one-of rule come back as entries in `bad_rows` (index + message) so
/// the batch can continue around them.
struct BadRow {
    int row;  ///< 0-based data-row index
    std::string id;
    std::string message;
};

struct BatchParse {
    std::vector<BatchRecord> records;  ///< records in file order; bad rows omitted
    std::vector<BadRow> bad_rows;
    std::vector<int> record_rows;  ///< row index of each record
    int total_rows{0};
};

BatchParse parse_batch_csv(const std::string& text);

/// Batch CSV output: one row per input row, same order, carrying status,
/// all seven joint angles in radians and degrees, and the wrist/elbow
/// witness points.
std::string batch_header();
std::string batch_row(const std::string& id, const std::string& status,
                      const std::string& reason, const SolveReport& report);
std::string batch_parse_error_row(const std::string& id, const std::string& message);

/// Sweep CSV: rows sampling the feasible arc uniformly.
std::string sweep_header();
std::string sweep_csv(const WristPoint& wrist, const RedundancyCircle& circle,
                      const ArmGeometry& geom, const std::optional<TargetPose>& hand_target,
                      int samples);

}  // namespace armik
