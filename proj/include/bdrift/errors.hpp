#pragma once

#include <stdexcept>

namespace bdrift {

/// Iterative machinery failed to converge or a bracket could not be found.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The two-point boundary system has no solution with the required ordering;
/// the requested rate is outside the disconnected-region window.
struct NotInBubbleRegime : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace bdrift
