#pragma once

#include <stdexcept>
#include <string>

namespace mhae {

/// Invalid run or model configuration (bad dims, unknown keys, bad paths).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file (IDX or model JSON); message names offset or field.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Training produced a non-finite loss; message names the batch.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mhae
