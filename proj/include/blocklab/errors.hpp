#pragma once

#include <stdexcept>
#include <string>

namespace blocklab {

// Base class for all engine errors; the CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAGroup : Error {
    explicit NotAGroup(const std::string& reason) : Error("not a group: " + reason) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error("size cap exceeded: " + what) {}
};

struct NotNormal : Error {
    explicit NotNormal(const std::string& what) : Error("subgroup not normal: " + what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NotAlgebraicInteger : Error {
    explicit NotAlgebraicInteger(const std::string& what) : Error("not an algebraic integer: " + what) {}
};

struct NotIntegral : Error {
    explicit NotIntegral(const std::string& what) : Error("non-integral value: " + what) {}
};

struct NotPPowerRoot : Error {
    explicit NotPPowerRoot(const std::string& what) : Error("not a p-power root of unity: " + what) {}
};

struct GroupMismatch : Error {
    GroupMismatch() : Error("class functions belong to different groups") {}
};

// Internal consistency failure while building a character table. Must never
// occur on valid input; treated as a bug.
struct LiftFailure : Error {
    explicit LiftFailure(const std::string& what) : Error("character lift failure: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// A violation of the Siegel/Cassels trace bound. The bound is a theorem, so
// this is raised for human review rather than returned as a result.
struct SiegelViolation : Error {
    explicit SiegelViolation(const std::string& what) : Error("Siegel bound violated: " + what) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error("internal error: " + what) {}
};

}  // namespace blocklab
