#pragma once

#include <stdexcept>
#include <string>

namespace rissim {

// Bad input: malformed configs, unreadable files, arguments outside their
// domain. Mapped to CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input was valid but the requested result does not exist (degenerate
// pattern, exclusion region covering the grid, ...). CLI exit code 2.
class ComputationError : public std::runtime_error {
public:
    explicit ComputationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rissim
