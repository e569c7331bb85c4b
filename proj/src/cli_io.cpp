#include "armik/cli_io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

namespace armik {

namespace {

using nlohmann::json;

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json plane_json(const Plane& p) {
    return json{{"normal", vec_json(p.normal)}, {"offset", p.offset}};
}

/// Shortest representation that parses back to the same double.
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string sanitize(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

const std::array<Joint, kJointCount> kAngleOrder = all_joints();

void append_angle_block(std::ostringstream& out, const JointSolution* sol) {
    for (int pass = 0; pass < 2; ++pass) {
        for (Joint j : kAngleOrder) {
            out << ',';
            if (!sol) continue;
            const auto value = joint_value(*sol, j);
            if (value) out << fmt(pass == 0 ? *value : deg(*value));
        }
    }
}

std::string angle_block_header() {
    std::ostringstream out;
    for (const char* suffix : {"_rad", "_deg"})
        for (Joint j : kAngleOrder) out << ',' << joint_name(j) << suffix;
    return out.str();
}

}  // namespace

std::string report_to_json(const SolveReport& report) {
    json doc;
    doc["schema_version"] = 1;
    doc["status"] = solve_status_name(report.status);
    if (report.reason != FailReason::none)
        doc["reason"] = fail_reason_name(report.reason);
    if (report.reachability)
        doc["reachability"] = reachability_name(*report.reachability);

    if (report.circle) {
        const RedundancyCircle& c = *report.circle;
        json arcs = json::array();
        for (const ArcInterval& a : c.feasible_arc.arcs())
            arcs.push_back(json::array({a.start, a.start + a.length}));
        doc["circle"] = json{{"center", vec_json(c.center)},
                             {"radius", c.radius},
                             {"basis_a", vec_json(c.basis_a)},
                             {"basis_b", vec_json(c.basis_b)},
                             {"beta", c.beta},
                             {"plane", plane_json(c.plane)},
                             {"feasible_arc", arcs}};
    }

    if (report.solution) {
        const JointSolution& s = *report.solution;
        json rad = json::object();
        json degs = json::object();
        for (Joint j : kAngleOrder) {
            if (const auto value = joint_value(s, j)) {
                rad[joint_name(j)] = *value;
                degs[joint_name(j)] = deg(*value);
            }
        }
        json sol{{"angles_rad", rad},
                 {"angles_deg", degs},
                 {"wrist", vec_json(s.wrist)},
                 {"elbow", vec_json(s.elbow)},
                 {"flags",
                  json{{"elbow_y_negative", s.elbow_y_negative},
                       {"elbow_z_negative", s.elbow_z_negative},
                       {"wrist_branch", s.wrist_branch}}}};
        if (s.hand) {
            json hand{{"ang_muneca", s.hand->ang_muneca},
                      {"ang_mano", s.hand->ang_mano},
                      {"alpha", s.hand->alpha},
                      {"roll_free", s.hand->roll_free}};
            if (s.hand->plane) hand["plane"] = plane_json(*s.hand->plane);
            sol["hand"] = hand;
        }
        doc["solution"] = sol;
    }

    if (!report.violations.empty()) {
        json violations = json::array();
        for (const LimitViolation& v : report.violations)
            violations.push_back(json{{"joint", joint_name(v.joint)},
                                      {"value", v.value},
                                      {"lo", v.limit.lo},
                                      {"hi", v.limit.hi}});
        doc["violations"] = violations;
    }
    return doc.dump(2);
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        // trim surrounding whitespace
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

const std::vector<std::string> kBatchColumns = {
    "id",    "wrist_x", "wrist_y",    "wrist_z",  "tip_x",  "tip_y",
    "tip_z", "ang_muneca", "ang_mano", "policy", "elbow_t"};

std::optional<double> parse_double(const std::string& s) {
    if (s.empty()) return std::nullopt;
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) return std::nullopt;
        return v;
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace

BatchParse parse_batch_csv(const std::string& text) {
    BatchParse out;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw DegenerateInput("parse_batch_csv: missing header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::map<std::string, int> columns;
    {
        const auto headers = split_line(line);
        for (size_t i = 0; i < headers.size(); ++i) {
            if (std::find(kBatchColumns.begin(), kBatchColumns.end(), headers[i]) ==
                kBatchColumns.end())
                throw DegenerateInput("parse_batch_csv: unknown column " + headers[i]);
            columns[headers[i]] = static_cast<int>(i);
        }
    }
    const auto field = [&columns](const std::vector<std::string>& row,
                                  const std::string& name) -> std::string {
        const auto it = columns.find(name);
        if (it == columns.end() || it->second >= static_cast<int>(row.size())) return "";
        return row[static_cast<size_t>(it->second)];
    };

    int row_index = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const int row = row_index++;
        out.total_rows = row_index;
        const auto fields = split_line(line);

        BatchRecord record;
        record.id = field(fields, "id");

        const auto wx = parse_double(field(fields, "wrist_x"));
        const auto wy = parse_double(field(fields, "wrist_y"));
        const auto wz = parse_double(field(fields, "wrist_z"));
        const auto tx = parse_double(field(fields, "tip_x"));
        const auto ty = parse_double(field(fields, "tip_y"));
        const auto tz = parse_double(field(fields, "tip_z"));

        const bool any_wrist = wx || wy || wz;
        const bool any_tip = tx || ty || tz || !field(fields, "ang_muneca").empty() ||
                             !field(fields, "ang_mano").empty();
        std::string error;
        if (any_wrist && any_tip)
            error = "row has both a wrist and a tip target";
        else if (any_wrist) {
            if (wx && wy && wz)
                record.wrist = Vec3{*wx, *wy, *wz};
            else
                error = "incomplete wrist coordinates";
        } else if (any_tip) {
            const auto muneca = parse_double(field(fields, "ang_muneca"));
            const auto mano = parse_double(field(fields, "ang_mano"));
            if (tx && ty && tz)
                record.target = TargetPose{{*tx, *ty, *tz}, muneca.value_or(0.0),
                                           mano.value_or(0.0)};
            else
                error = "incomplete tip coordinates";
        } else {
            error = "row has neither a wrist nor a tip target";
        }

        const std::string policy = field(fields, "policy");
        const auto elbow_t = parse_double(field(fields, "elbow_t"));
        if (error.empty()) {
            if (policy == "fixed" || (policy.empty() && elbow_t)) {
                if (elbow_t)
                    record.policy = ElbowPolicy::fixed(*elbow_t);
                else
                    error = "policy fixed needs elbow_t";
            } else if (policy == "mid") {
                record.policy = ElbowPolicy::mid();
            } else if (policy == "nearest") {
                error = "policy nearest is not available in batch mode";
            } else if (!policy.empty()) {
                error = "unknown policy " + policy;
            }
        }

        if (!error.empty()) {
            out.bad_rows.push_back({row, record.id, error});
        } else {
            out.records.push_back(std::move(record));
            out.record_rows.push_back(row);
        }
    }
    return out;
}

std::string batch_header() {
    return "id,status,reason" + angle_block_header() +
           ",wrist_x,wrist_y,wrist_z,elbow_x,elbow_y,elbow_z";
}

std::string batch_row(const std::string& id, const std::string& status,
                      const std::string& reason, const SolveReport& report) {
    std::ostringstream out;
    out << sanitize(id) << ',' << status << ',' << sanitize(reason);
    const JointSolution* sol = report.solution ? &*report.solution : nullptr;
    append_angle_block(out, sol);
    for (int i = 0; i < 6; ++i) {
        out << ',';
        if (sol) {
            const Vec3& v = i < 3 ? sol->wrist : sol->elbow;
            out << fmt(i % 3 == 0 ? v.x : (i % 3 == 1 ? v.y : v.z));
        }
    }
    return out.str();
}

std::string batch_parse_error_row(const std::string& id, const std::string& message) {
    std::ostringstream out;
    out << sanitize(id) << ",parse_error," << sanitize(message);
    append_angle_block(out, nullptr);
    out << ",,,,,,";
    return out.str();
}

std::string sweep_header() {
    return "i,t_rad,t_deg" + angle_block_header() + ",elbow_x,elbow_y,elbow_z";
}

std::string sweep_csv(const WristPoint& wrist, const RedundancyCircle& circle,
                      const ArmGeometry& geom, const std::optional<TargetPose>& hand_target,
                      int samples) {
    std::ostringstream out;
    out << sweep_header() << '\n';
    const auto ts = circle.feasible_arc.sample(samples);
    for (size_t i = 0; i < ts.size(); ++i) {
        const JointSolution sol = extract_solution(ts[i], wrist, circle, geom, hand_target);
        out << i << ',' << fmt(ts[i]) << ',' << fmt(deg(ts[i]));
        append_angle_block(out, &sol);
        out << ',' << fmt(sol.elbow.x) << ',' << fmt(sol.elbow.y) << ','
            << fmt(sol.elbow.z) << '\n';
    }
    return out.str();
}

}  // namespace armik
