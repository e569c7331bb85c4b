#pragma once

#include <stdexcept>

namespace armik {

/// Geometric input outside an operation's domain (zero vector, collinear
/// points, non-finite coordinates).
struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Straight-arm configuration: shoulder, elbow and circle center are
/// collinear, so the hand displacement plane is undefined and the wrist
/// roll may be chosen freely by the caller.
struct DegenerateHandPlane : DegenerateInput {
    using DegenerateInput::DegenerateInput;
};

/// A quantity that earlier validation should have made impossible.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

/// Invalid configuration document; the message carries the key path.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An elbow-selection policy that cannot be honored.
struct PolicyViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace armik
