#pragma once

#include <stdexcept>
#include <string>

namespace tt {

// Bad configuration or bad arguments supplied by the user (CLI exit 1).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A required file/checkpoint/dataset is missing or malformed (CLI exit 2).
struct ArtifactError : std::runtime_error {
    explicit ArtifactError(const std::string& msg) : std::runtime_error(msg) {}
};

// NaN/Inf or another numerical failure surfaced at runtime (CLI exit 3).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tt
