#pragma once

#include <stdexcept>
#include <string>

namespace tforge {

// Parameters outside an operation's domain (bad shape parameters,
// malformed partitions, dimension mismatches).
struct InvalidParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A cell reference outside the diagram it indexes.
struct CellOutsideShape : std::domain_error {
    using std::domain_error::domain_error;
};

// An enumeration or closure exceeded its configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series coefficient beyond the exactness horizon was requested, or two
// series were compared past their common horizon.
struct TruncationError : std::logic_error {
    using std::logic_error::logic_error;
};

// q -> 1 limit does not exist (net negative cyclotomic degree).
struct DivergentLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An evaluator that must produce an integer (or a polynomial) did not.
// Signals a transcription bug, never expected on valid input.
struct NonIntegerResult : std::logic_error {
    using std::logic_error::logic_error;
};

// Two routes that must agree exactly did not.
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lattice-sum terms failed to decay geometrically.
struct DivergenceSuspected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed form evaluated at a pole (a == b in the q-Selberg product).
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace tforge
