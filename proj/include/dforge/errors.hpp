#pragma once

#include <stdexcept>
#include <string>

namespace dforge {

// Error taxonomy shared by all modules.  Each maps to a CLI exit code:
// precondition/input errors -> 2, resource limits -> 3, pipeline failures -> 4.

struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

struct NotInPosition : std::invalid_argument {
    explicit NotInPosition(const std::string& what) : std::invalid_argument(what) {}
};

struct Inconclusive : std::runtime_error {
    explicit Inconclusive(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

struct PipelineFailure : std::runtime_error {
    explicit PipelineFailure(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a divisor evaluates to the zero function on a curve.  This is a
// meaningful signal, not a crash: the curve lies inside the divisor.
struct CurveOnDivisor : std::runtime_error {
    explicit CurveOnDivisor(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::invalid_argument {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int col_)
        : std::invalid_argument(what + " (line " + std::to_string(line_) +
                                ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

}  // namespace dforge
