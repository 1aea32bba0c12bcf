#pragma once

#include <stdexcept>
#include <string>

namespace sdirand {

/// A state vector left the Bloch ball (norm > 1 beyond tolerance).
struct InvalidStateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A measurement axis is not a unit vector (beyond tolerance).
struct InvalidMeasurementError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dimensions of two objects that must agree do not.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A size guard protecting an exhaustive computation was exceeded.
struct CapacityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An index is outside its valid range.
struct RangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Not enough samples to carry out an estimate.
struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A witness value outside the physically attainable interval.
struct InfeasibleValueError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace sdirand
