#ifndef EXPLORE_ERRORS_HPP_
#define EXPLORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace explore {

/// Base class for all pipeline errors surfaced to callers and the CLI.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Geometric input violates a precondition (collinear triple, zero vector, ...).
struct DegenerateInputError : Error {
    using Error::Error;
};

/// A cloud or map that must be non-empty is empty.
struct EmptyInputError : Error {
    using Error::Error;
};

/// All 360 angular bins are covered; no exit direction exists.
struct NoGapError : Error {
    using Error::Error;
};

/// RRT exhausted max_iters without reaching the goal.
struct PlanningFailureError : Error {
    using Error::Error;
};

/// Brute-force enumeration guard tripped.
struct InstanceTooLargeError : Error {
    using Error::Error;
};

/// An index set refers outside its ground set.
struct IndexError : Error {
    using Error::Error;
};

/// Malformed file contents; message carries the line number where known.
struct ParseError : Error {
    using Error::Error;
};

/// Environment or pipeline configuration fails validation.
struct InvalidSpecError : Error {
    using Error::Error;
};

} // namespace explore

#endif // EXPLORE_ERRORS_HPP_
