#pragma once

#include <stdexcept>
#include <string>

namespace mahler {

enum class ErrorKind {
    malformed_input,
    unsupported_equation,
    zero_trailing_coefficient,
    exponent_overflow,
    precondition_violation,
    invariant_violation,
    inconsistent_prefix,
    insufficient_prefix,
    no_such_edge,
    inexact_division,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

const char* error_name(ErrorKind kind);

// Exit status used by the command line front end.
int exit_code(ErrorKind kind);

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mahler
