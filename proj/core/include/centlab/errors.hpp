#pragma once

#include <stdexcept>
#include <string>

namespace centlab {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidNode : Error {
    using Error::Error;
};

struct SelfLoop : Error {
    using Error::Error;
};

struct DuplicateEdge : Error {
    using Error::Error;
};

struct NotAPermutation : Error {
    using Error::Error;
};

/// Request exceeds the supported exhaustive-search range.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string &msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

struct UnknownFixture : Error {
    using Error::Error;
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct InvalidArguments : Error {
    using Error::Error;
};

} // namespace centlab
