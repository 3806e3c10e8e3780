#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error {
    explicit SelfLoopError(const std::string& v)
        : Error("self-loop at vertex '" + v + "'"), vertex(v) {}
    SelfLoopError(const std::string& v, int line)
        : Error("line " + std::to_string(line) + ": self-loop at vertex '" +
                v + "'"),
          vertex(v) {}
    std::string vertex;
};

struct DuplicateEdgeError : Error {
    DuplicateEdgeError(const std::string& u, const std::string& v)
        : Error("duplicate edge (" + u + ", " + v + ")"), from(u), to(v) {}
    DuplicateEdgeError(const std::string& u, const std::string& v, int line)
        : Error("line " + std::to_string(line) + ": duplicate edge (" + u +
                ", " + v + ")"),
          from(u), to(v) {}
    std::string from, to;
};

/// Witness pair (from, to): there is no directed path from `from` to `to`.
struct NotStronglyConnectedError : Error {
    NotStronglyConnectedError(const std::string& u, const std::string& v)
        : Error("not strongly connected: no path from '" + u + "' to '" + v + "'"),
          from(u), to(v) {}
    std::string from, to;
};

struct SingularSystemError : Error {
    using Error::Error;
};

struct NotEulerianError : Error {
    using Error::Error;
};

struct NotUnweightedError : Error {
    using Error::Error;
};

struct EpsOutOfRangeError : Error {
    using Error::Error;
};

struct SamePairError : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    explicit TooLargeError(int n_, int limit)
        : Error("graph too large for brute force: n = " + std::to_string(n_) +
                " > " + std::to_string(limit)),
          n(n_) {}
    int n;
};

struct NoStabilizationError : Error {
    using Error::Error;
};

struct NotAGeodesicError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct NotApplicableError : Error {
    using Error::Error;
};

struct BadParamsError : Error {
    using Error::Error;
};

struct TooSmallError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

/// Solver-level failures (LP infeasible/unbounded where the formulation
/// forbids it, Jacobi non-convergence). Always indicates a bug.
struct NumericalError : Error {
    using Error::Error;
};

}  // namespace ricci
