#pragma once

#include <stdexcept>
#include <string>

namespace mopkit {

struct MopkitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Family parameters violate the admissibility conditions of the weight system.
struct AdmissibilityError : MopkitError {
    using MopkitError::MopkitError;
};

// A lower Pochhammer hit zero inside the summed index range.
struct VanishingLowerPochhammer : MopkitError {
    using MopkitError::MopkitError;
};

// An inner sum that must vanish beyond the polynomial degree was nonzero;
// signals a wrong parameter wiring.
struct CancellationFailure : MopkitError {
    using MopkitError::MopkitError;
};

// Rodrigues pipeline left nonzero residual weight exponents.
struct ResidualExponentError : MopkitError {
    using MopkitError::MopkitError;
};

// Moment matrix is rank deficient: non-normal index or bad parameters.
struct NotNormal : MopkitError {
    using MopkitError::MopkitError;
};

// A scalar basis element has zero leading coefficient.
struct SingularLeadingCoefficient : MopkitError {
    using MopkitError::MopkitError;
};

struct InconsistentRecurrence : MopkitError {
    using MopkitError::MopkitError;
};

// No closed-form constructor exists for the requested family.
struct UnavailableRepresentation : MopkitError {
    using MopkitError::MopkitError;
};

struct PoleError : MopkitError {
    using MopkitError::MopkitError;
};

struct NonConvergence : MopkitError {
    using MopkitError::MopkitError;
};

struct HypothesisViolation : MopkitError {
    using MopkitError::MopkitError;
};

}  // namespace mopkit
