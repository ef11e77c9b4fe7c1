#pragma once

#include <stdexcept>
#include <string>

namespace rba {

// Structural violations found while validating raw arc data.
enum class InstanceErrorCode {
    ColorNotSpanning,
    MultipleIncoming,
    CycleInColor,
    UnknownVertex,
    UnknownColor,
    DuplicateArc,
};

class InstanceError : public std::runtime_error {
public:
    InstanceError(InstanceErrorCode code, const std::string& msg, int color = 0, int vertex = 0)
        : std::runtime_error(msg), code_(code), color_(color), vertex_(vertex) {}

    InstanceErrorCode code() const { return code_; }
    int color() const { return color_; }
    int vertex() const { return vertex_; }

private:
    InstanceErrorCode code_;
    int color_;
    int vertex_;
};

// An operation was invoked on input outside its hypothesis class.
enum class PreconditionCode {
    NotAStar,
    WrongColorCount,
    SeedMissingMultiRoot,
    NotRainbowSeed,
    NotAllPaths,
    ShapeViolation,
    TooManyMultiRoots,
    TooFewColors,
    NotUnderlyingTree,
    TargetTooLarge,
    InvalidReducedCertificate,
    NotRootedAtS1,
    PathNotFound,
    NotAPerfectMatching,
    InvalidHypergraph,
    InfeasibleSpec,
    TooLarge,
};

const char* precondition_code_name(PreconditionCode code);

class PreconditionError : public std::runtime_error {
public:
    PreconditionError(PreconditionCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    PreconditionCode code() const { return code_; }

private:
    PreconditionCode code_;
};

// A search ran out of nodes or seconds.  The answer is "unknown", never "no":
// callers must not record a budget stop as a counterexample.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(const std::string& msg, long long nodes, double seconds)
        : std::runtime_error(msg), nodes_(nodes), seconds_(seconds) {}

    long long nodes() const { return nodes_; }
    double seconds() const { return seconds_; }

private:
    long long nodes_;
    double seconds_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rba
