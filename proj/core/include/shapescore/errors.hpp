#pragma once

#include <stdexcept>
#include <string>

namespace shapescore {

/// Failure categories; the CLI maps these onto process exit codes.
enum class ErrorKind {
    InvalidInput,        // unreadable or ill-formed input (exit 2)
    DegenerateGeometry,  // geometric precondition violated (exit 3)
    NumericalFailure,    // a numeric computation could not proceed (exit 4)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) {
    throw Error(ErrorKind::InvalidInput, msg);
}
[[noreturn]] inline void fail_degenerate(const std::string& msg) {
    throw Error(ErrorKind::DegenerateGeometry, msg);
}
[[noreturn]] inline void fail_numeric(const std::string& msg) {
    throw Error(ErrorKind::NumericalFailure, msg);
}

}  // namespace shapescore
