#pragma once

#include <stdexcept>
#include <string>

namespace wd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input file could not be parsed; carries the 1-based offending line.
struct ParseError : Error {
    ParseError(int line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    int line;
};

// A PlaneGraph invariant does not hold (rotation/face/Euler/outer-walk).
struct EmbeddingError : Error {
    using Error::Error;
};

// DelSave called with a target outside N(u) + blank, or on a dead vertex.
struct InvalidMoveError : Error {
    using Error::Error;
};

// Instance precondition violations, one code per Theorem-style condition.
enum class InstanceErrorCode {
    s_too_large,
    s_not_on_boundary,
    s_not_consecutive,
    s_duplicate,
    i_not_on_boundary,
    i_intersects_s,
    i_not_independent,
    i_three_neighbors_in_s,
};

struct InstanceError : Error {
    InstanceError(InstanceErrorCode c, const std::string& what) : Error(what), code(c) {}
    InstanceErrorCode code;
};

// Exhaustive search asked for a graph beyond its size bound.
struct SizeError : Error {
    using Error::Error;
};

// An internal contradiction: a rule misfired, a derived witness failed to
// verify, or a structural fact promised by the reduction does not hold.
// This indicates a bug in the implementation, never in the input.
struct EngineBug : Error {
    using Error::Error;
};

} // namespace wd
