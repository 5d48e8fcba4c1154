#pragma once

#include <stdexcept>

namespace wavepair {

// Grid constructed with an odd or non-positive sample count. Even n is a
// hard requirement: the quadrature multiplier needs a single Nyquist bin.
struct OddSampleCount : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Series payload contains NaN or infinity.
struct NonFiniteValue : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two series that must share a sampling grid do not.
struct GridMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An inverse transform expected a real result but left a significant
// imaginary part, which signals a non-conjugate-symmetric spectrum.
struct NonNegligibleImaginaryResidue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Admissibility integral rejected: the spectrum does not vanish at omega = 0.
struct NotAdmissible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A scalogram slice was requested at a scale the analysis did not compute.
struct UnknownScale : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed CSV input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wavepair
