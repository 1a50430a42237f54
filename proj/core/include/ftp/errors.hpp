#pragma once

#include <stdexcept>
#include <string>

namespace ftp {

// Error taxonomy mirrored by the CLI exit codes:
//   ConfigError -> 2, FreezeViolation -> 3, ShapeError/DataError -> 4.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FreezeViolation : std::runtime_error {
    explicit FreezeViolation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ftp
