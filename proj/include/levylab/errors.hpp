#pragma once

#include <stdexcept>
#include <string>

namespace levylab {

struct LevyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidMechanism : LevyError {
    using LevyError::LevyError;
};

// Requested a quantity that needs <pi,1> < infinity.
struct InfiniteMass : LevyError {
    using LevyError::LevyError;
};

// Restricted sampling or conditioning on a set of zero pi-mass.
struct ZeroTail : LevyError {
    using LevyError::LevyError;
};

// Law stated only for diffuse Levy measures.
struct AtomicPi : LevyError {
    using LevyError::LevyError;
};

struct NonConvergence : LevyError {
    NonConvergence(const std::string& what, double residual_)
        : LevyError(what + " (residual " + std::to_string(residual_) + ")"), residual(residual_) {}
    double residual;
};

struct QuadratureError : LevyError {
    QuadratureError(const std::string& what, double achieved_)
        : LevyError(what + " (achieved error estimate " + std::to_string(achieved_) + ")"),
          achieved(achieved_) {}
    double achieved;
};

struct ConfigError : LevyError {
    using LevyError::LevyError;
};

}  // namespace levylab
