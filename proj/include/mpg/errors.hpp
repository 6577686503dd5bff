#pragma once

#include <stdexcept>
#include <string>

namespace mpg {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structural game defects found by validate_game. `vertex` names the first
// offending vertex (or -1 when the defect is not tied to one).
class ValidationError : public Error {
public:
    enum class Kind { SinkVertex, BadDistribution, WeightOnControlledEdge, MissingPriority, Malformed };

    ValidationError(Kind kind, int vertex, const std::string& what)
        : Error(what), kind(kind), vertex(vertex) {}

    Kind kind;
    int vertex;
};

class StrategyMismatchError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class RandomEdgeDroppedError : public Error {
public:
    using Error::Error;
};

class NotAnMcError : public Error {
public:
    using Error::Error;
};

class NotAnMdpError : public Error {
public:
    using Error::Error;
};

class TwoControlledPlayersError : public NotAnMdpError {
public:
    using NotAnMdpError::NotAnMdpError;
};

class SingularSystemError : public Error {
public:
    using Error::Error;
};

// Instance exceeds a configured enumeration/reduction cap.
class TooLargeError : public Error {
public:
    TooLargeError(const std::string& what, unsigned long long bound)
        : Error(what), bound(bound) {}

    unsigned long long bound;
};

class BadDeltaError : public Error {
public:
    using Error::Error;
};

class NotAPrimedTargetError : public Error {
public:
    using Error::Error;
};

// The reduction oracle's exact certificate failed: the lifted strategy pair is
// not mutually optimal, i.e. the chosen delta was too coarse.
class NotMutuallyOptimalError : public Error {
public:
    using Error::Error;
};

class InfeasibleSpecError : public Error {
public:
    using Error::Error;
};

class BadParametersError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line(line), reason(reason) {}

    int line;
    std::string reason;
};

class NonEdgeChoiceError : public Error {
public:
    NonEdgeChoiceError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line(line) {}

    int line;
};

} // namespace mpg
