#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "armik/cli_io.hpp"
#include "armik/fk_oracle.hpp"
#include "armik/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnsolved = 2;

struct CommonFlags {
    std::string geometry_path;
    std::vector<double> wrist;
    std::vector<double> tip;
    double ang_muneca = 0.0;
    double ang_mano = 0.0;
    std::string constraints = "none";
    std::string out_path;
};

void add_target_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--geometry", flags.geometry_path, "arm geometry config (JSON)")
        ->required();
    cmd->add_option("--wrist", flags.wrist, "raw wrist point x,y,z")
        ->delimiter(',')
        ->expected(3);
    cmd->add_option("--tip", flags.tip, "hand tip point x,y,z")
        ->delimiter(',')
        ->expected(3);
    cmd->add_option("--ang-muneca", flags.ang_muneca, "hand polar angle (rad)");
    cmd->add_option("--ang-mano", flags.ang_mano, "hand azimuth angle (rad)");
    cmd->add_option("--constraints", flags.constraints, "none | right-body")
        ->check(CLI::IsMember({"none", "right-body"}));
    cmd->add_option("--out", flags.out_path, "write output here instead of stdout");
}

bool fill_request_target(const CommonFlags& flags, armik::SolveRequest& request,
                         std::string& error) {
    if (!flags.tip.empty())
        request.target = armik::TargetPose{{flags.tip[0], flags.tip[1], flags.tip[2]},
                                           flags.ang_muneca, flags.ang_mano};
    if (!flags.wrist.empty())
        request.wrist = armik::Vec3{flags.wrist[0], flags.wrist[1], flags.wrist[2]};
    if (!request.target && !request.wrist) {
        error = "give --wrist and/or --tip";
        return false;
    }
    if (flags.constraints == "right-body")
        request.body_constraint = armik::right_body_halfspace();
    return true;
}

int write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    out << content;
    return kExitOk;
}

int run_solve(const CommonFlags& flags, const std::string& policy_name,
              const std::optional<double>& elbow_t,
              const std::vector<double>& current_angles) {
    const armik::ArmConfig config = armik::load_config_file(flags.geometry_path);
    armik::SolveRequest request;
    std::string error;
    if (!fill_request_target(flags, request, error)) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }

    if (elbow_t) {
        request.policy = armik::ElbowPolicy::fixed(*elbow_t);
    } else if (policy_name == "mid" || policy_name.empty()) {
        request.policy = armik::ElbowPolicy::mid();
    } else if (policy_name == "fixed") {
        std::cerr << "error: --policy fixed needs --elbow-t\n";
        return kExitUsage;
    } else if (policy_name == "nearest") {
        if (current_angles.size() != armik::kJointCount) {
            std::cerr << "error: --policy nearest needs --current with "
                      << armik::kJointCount << " joint values\n";
            return kExitUsage;
        }
        armik::JointSolution current;
        current.ang_hombro_z = current_angles[0];
        current.ang_hombro_x = current_angles[1];
        current.t = current_angles[2];
        current.ang_codo = current_angles[3];
        armik::HandResult hand;
        hand.wrist_roll_total = current_angles[4];
        hand.hand_flex = current_angles[5];
        current.hand = hand;
        current.gripper = current_angles[6];
        request.current = current;
        request.policy = armik::ElbowPolicy::nearest();
    }

    const armik::SolveReport report =
        armik::solve(request, config.geometry, config.limits);
    const int rc = write_output(flags.out_path, armik::report_to_json(report) + "\n");
    if (rc != kExitOk) return rc;
    if (report.status != armik::SolveStatus::solved) {
        std::cerr << "unsolved: "
                  << (report.status == armik::SolveStatus::out_of_limits
                          ? "joint limits violated"
                          : armik::fail_reason_name(report.reason))
                  << "\n";
        return kExitUnsolved;
    }
    return kExitOk;
}

int run_batch(const std::string& geometry_path, const std::string& in_path,
              const std::string& out_path, const std::string& constraints) {
    const armik::ArmConfig config = armik::load_config_file(geometry_path);
    std::ifstream in(in_path);
    if (!in) {
        std::cerr << "error: cannot read " << in_path << "\n";
        return kExitUsage;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    armik::BatchParse parsed;
    try {
        parsed = armik::parse_batch_csv(buffer.str());
    } catch (const armik::DegenerateInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    // Rows come back out in input order, solved or not.
    std::vector<std::string> rows(static_cast<size_t>(parsed.total_rows));
    for (const auto& bad : parsed.bad_rows)
        rows[static_cast<size_t>(bad.row)] = armik::batch_parse_error_row(bad.id, bad.message);
    for (size_t i = 0; i < parsed.records.size(); ++i) {
        const armik::BatchRecord& record = parsed.records[i];
        armik::SolveRequest request;
        request.target = record.target;
        request.wrist = record.wrist;
        request.policy = record.policy.value_or(armik::ElbowPolicy::mid());
        if (constraints == "right-body")
            request.body_constraint = armik::right_body_halfspace();
        const armik::SolveReport report =
            armik::solve(request, config.geometry, config.limits);
        std::string reason;
        if (report.status == armik::SolveStatus::out_of_limits) {
            for (const auto& v : report.violations)
                reason += (reason.empty() ? "" : ";") + std::string(joint_name(v.joint));
        } else if (report.reason != armik::FailReason::none) {
            reason = armik::fail_reason_name(report.reason);
        }
        rows[static_cast<size_t>(parsed.record_rows[i])] = armik::batch_row(
            record.id, armik::solve_status_name(report.status), reason, report);
    }

    std::ostringstream out;
    out << armik::batch_header() << '\n';
    for (const std::string& row : rows)
        if (!row.empty()) out << row << '\n';
    return write_output(out_path, out.str());
}

int run_sweep(const CommonFlags& flags, int samples) {
    const armik::ArmConfig config = armik::load_config_file(flags.geometry_path);
    if (samples < 2) {
        std::cerr << "error: --samples must be at least 2\n";
        return kExitUsage;
    }
    armik::SolveRequest request;
    std::string error;
    if (!fill_request_target(flags, request, error)) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }

    armik::WristPoint wrist;
    if (request.wrist)
        wrist = {*request.wrist, request.target};
    else
        wrist = armik::wrist_from_target(*request.target, config.geometry);

    const armik::Reachability reach =
        armik::classify_reachability(wrist.m, config.geometry);
    if (reach != armik::Reachability::reachable &&
        reach != armik::Reachability::tangent_point) {
        std::cerr << "unsolved: " << armik::reachability_name(reach) << "\n";
        return kExitUnsolved;
    }
    armik::RedundancyCircle circle = armik::make_circle(wrist, config.geometry);
    armik::ArcConstraints constraints;
    if (flags.constraints == "right-body")
        constraints.body = armik::right_body_halfspace();
    circle.feasible_arc = armik::feasible_arc(circle, constraints);
    if (circle.feasible_arc.is_empty()) {
        std::cerr << "unsolved: no_valid_elbow\n";
        return kExitUnsolved;
    }
    return write_output(flags.out_path,
                        armik::sweep_csv(wrist, circle, config.geometry,
                                         request.target, samples));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form inverse kinematics for a 7-DOF arm"};
    app.require_subcommand(1);

    CommonFlags solve_flags;
    std::string policy_name;
    double elbow_t_value = 0.0;
    std::vector<double> current_angles;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve one target, JSON report");
    add_target_flags(solve_cmd, solve_flags);
    CLI::Option* elbow_t_opt =
        solve_cmd->add_option("--elbow-t", elbow_t_value, "fixed circle parameter (rad)");
    solve_cmd->add_option("--policy", policy_name, "fixed | mid | nearest")
        ->check(CLI::IsMember({"fixed", "mid", "nearest"}));
    solve_cmd
        ->add_option("--current", current_angles,
                     "current joint values for --policy nearest (7 radians)")
        ->delimiter(',')
        ->expected(armik::kJointCount);

    std::string batch_geometry, batch_in, batch_out, batch_constraints = "none";
    CLI::App* batch_cmd = app.add_subcommand("batch", "solve a CSV of targets");
    batch_cmd->add_option("--geometry", batch_geometry, "arm geometry config (JSON)")
        ->required();
    batch_cmd->add_option("input", batch_in, "input CSV path")->required();
    batch_cmd->add_option("--out", batch_out, "output CSV path (default stdout)");
    batch_cmd->add_option("--constraints", batch_constraints, "none | right-body")
        ->check(CLI::IsMember({"none", "right-body"}));

    CommonFlags sweep_flags;
    int samples = 0;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "sample the feasible arc of one target");
    add_target_flags(sweep_cmd, sweep_flags);
    sweep_cmd->add_option("--samples", samples, "number of arc samples (>= 2)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) {
            std::optional<double> elbow_t;
            if (elbow_t_opt->count() > 0) elbow_t = elbow_t_value;
            return run_solve(solve_flags, policy_name, elbow_t, current_angles);
        }
        if (batch_cmd->parsed())
            return run_batch(batch_geometry, batch_in, batch_out, batch_constraints);
        if (sweep_cmd->parsed()) return run_sweep(sweep_flags, samples);
    } catch (const armik::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
