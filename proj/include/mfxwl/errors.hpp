#pragma once

#include <stdexcept>
#include <string>

namespace mfxwl {

// Error categories map onto the CLI exit codes: io_error -> 2,
// config_error -> 3, numeric_error -> 4.

struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mfxwl
