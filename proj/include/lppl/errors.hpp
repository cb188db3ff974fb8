#pragma once

#include <stdexcept>
#include <string>

namespace lppl {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable, malformed, or invalid input data (files, series content).
// The CLI maps this to exit code 2.
struct DataError : Error {
    explicit DataError(const std::string& what) : Error(what) {}
};

// Invalid configuration or request parameters (flags, schedules, specs).
// The CLI maps this to exit code 3.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace lppl
