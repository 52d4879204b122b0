// Error types shared across the library. Every failure mode callers are
// expected to handle gets its own class; all derive from MathError so the
// CLI can map them to one exit code.
#pragma once

#include <stdexcept>
#include <string>

namespace cspoly {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : MathError {
    using MathError::MathError;
};
struct NegativePart : MathError {
    using MathError::MathError;
};
struct NotDivisible : MathError {
    using MathError::MathError;
};
struct DenominatorVanishes : MathError {
    using MathError::MathError;
};
struct KappaZero : MathError {
    using MathError::MathError;
};
struct DegenerateEigenvalue : MathError {
    using MathError::MathError;
};
struct NotInFatHook : MathError {
    using MathError::MathError;
};
struct NotHomogeneous : MathError {
    using MathError::MathError;
};
struct NotProportional : MathError {
    using MathError::MathError;
};
struct CutoffExceeded : MathError {
    using MathError::MathError;
};
struct PoleAtPoint : MathError {
    using MathError::MathError;
};
struct SingularSystem : MathError {
    using MathError::MathError;
};

}  // namespace cspoly
