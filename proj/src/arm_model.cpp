#include "armik/arm_model.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "armik/errors.hpp"

namespace armik {

namespace {

constexpr std::array<const char*, kJointCount> kJointNames = {
    "hombro_z", "hombro_x", "brazo_roll", "codo", "muneca", "mano", "pinza"};

double require_positive_length(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key))
        throw ConfigError(std::string(key) + ": missing required key");
    const auto& node = doc.at(key);
    if (!node.is_number())
        throw ConfigError(std::string(key) + ": must be a number");
    const double v = node.get<double>();
    if (!(v > 0.0))
        throw ConfigError(std::string(key) + " must be > 0");
    return v;
}

Interval parse_interval(const nlohmann::json& node, const std::string& path) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
        !node[1].is_number())
        throw ConfigError(path + ": expected [lo, hi] in radians");
    Interval iv{node[0].get<double>(), node[1].get<double>()};
    if (iv.lo > iv.hi)
        throw ConfigError(path + ": lo > hi");
    if (iv.hi - iv.lo > 2.0 * kPi)
        throw ConfigError(path + ": interval wider than 2*pi");
    return iv;
}

}  // namespace

const char* joint_name(Joint j) { return kJointNames[static_cast<int>(j)]; }

std::optional<Joint> joint_from_name(std::string_view name) {
    for (int i = 0; i < kJointCount; ++i)
        if (name == kJointNames[i]) return static_cast<Joint>(i);
    return std::nullopt;
}

ArmConfig load_config_text(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config does not parse: ") + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("config root must be an object");

    ArmConfig config;
    config.geometry.d1 = require_positive_length(doc, "d1");
    config.geometry.d2 = require_positive_length(doc, "d2");
    config.geometry.long_mano = require_positive_length(doc, "long_mano");

    if (doc.contains("limits")) {
        const auto& limits = doc.at("limits");
        if (!limits.is_object())
            throw ConfigError("limits: must be an object");
        for (const auto& [key, value] : limits.items()) {
            const auto joint = joint_from_name(key);
            if (!joint)
                throw ConfigError("limits." + key + ": unknown joint");
            config.limits[*joint] = parse_interval(value, "limits." + key);
        }
    }

    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "d1" && key != "d2" && key != "long_mano" && key != "limits")
            throw ConfigError(key + ": unknown key");
    }
    return config;
}

ArmConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_config_text(buffer.str());
}

std::string save_config(const ArmConfig& config) {
    nlohmann::json doc;
    doc["d1"] = config.geometry.d1;
    doc["d2"] = config.geometry.d2;
    doc["long_mano"] = config.geometry.long_mano;
    nlohmann::json limits = nlohmann::json::object();
    for (Joint j : all_joints()) {
        const Interval& iv = config.limits[j];
        limits[joint_name(j)] = {iv.lo, iv.hi};
    }
    doc["limits"] = limits;
    return doc.dump(2);
}

}  // namespace armik
