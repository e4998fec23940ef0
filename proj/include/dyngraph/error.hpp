#pragma once

#include <stdexcept>
#include <string>

namespace dyngraph {

/// Malformed input: self-loops, out-of-range ids, invalid update sequences,
/// unparsable files.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A recoloring cascade exceeded its configured cap.
class CascadeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A data structure would exceed the configured memory budget.
class BudgetError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// An internal invariant was found broken at runtime.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace dyngraph
