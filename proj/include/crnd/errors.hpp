#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace crnd {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SelfLoopError : Error {
    explicit SelfLoopError(const std::string& msg) : Error(msg) {}
};

struct EmptyNodeSetError : Error {
    explicit EmptyNodeSetError(const std::string& msg) : Error(msg) {}
};

struct InvalidRestrictionError : Error {
    explicit InvalidRestrictionError(const std::string& msg) : Error(msg) {}
};

struct SizeLimitError : Error {
    explicit SizeLimitError(const std::string& msg) : Error(msg) {}
};

struct OverlappingTerminalsError : Error {
    explicit OverlappingTerminalsError(const std::string& msg) : Error(msg) {}
};

// Raised by the vertex-LP core when the working system has no feasible point.
// `certificate_rows` lists constraint rows with nonzero phase-1 duals.
struct InfeasibleError : Error {
    std::vector<int> certificate_rows;
    InfeasibleError(const std::string& msg, std::vector<int> rows)
        : Error(msg), certificate_rows(std::move(rows)) {}
};

struct IterationLimitError : Error {
    explicit IterationLimitError(const std::string& msg) : Error(msg) {}
};

// An extreme point with free edges and a nontrivial constraint system had no
// edge of value >= 1/2.  Indicates a bug, never an expected condition.
struct HalfEdgeAssertionError : Error {
    explicit HalfEdgeAssertionError(const std::string& msg) : Error(msg) {}
};

struct NotKConnectedError : Error {
    explicit NotKConnectedError(const std::string& msg) : Error(msg) {}
};

struct UnsupportedFamilyError : Error {
    explicit UnsupportedFamilyError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct MixedFamiliesError : ParseError {
    MixedFamiliesError(int line, const std::string& msg) : ParseError(line, msg) {}
};

struct NonDecreasingTauError : ParseError {
    NonDecreasingTauError(int line, const std::string& msg) : ParseError(line, msg) {}
};

}  // namespace crnd
