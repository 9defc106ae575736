#pragma once

#include <stdexcept>
#include <string>

namespace wordlecast {

/// Malformed input data (bad CSV rows, schema violations, bad dates).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem problems: missing files, unwritable output paths.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation failed: optimizer did not converge, loss diverged.
class ComputeError : public std::runtime_error {
public:
    explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace wordlecast
