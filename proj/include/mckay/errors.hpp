#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input: out-of-range parameters, grammar errors, precondition violations
// that a caller can fix.  CLI exit code 2.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

// Numerical failure: integer snapping out of tolerance, eigenvalue collisions
// after retry exhaustion, element-separation violations.  CLI exit code 3.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

// File input/output failure.  CLI exit code 2.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace mckay
