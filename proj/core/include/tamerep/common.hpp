#pragma once

#include <stdexcept>
#include <string>

namespace tamerep {

// Error categories; the CLI maps these onto exit codes.
enum class ErrorKind {
    Parameter,     // invalid or incompatible input parameters
    TooLarge,      // desk-scale resource bound exceeded
    Verification,  // an internal consistency check failed
    Internal,      // a "cannot happen" condition fired
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

}  // namespace tamerep
