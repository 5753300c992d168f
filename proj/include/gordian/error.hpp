#pragma once

#include <stdexcept>
#include <string>

namespace gordian {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Problems with caller-supplied data (files, flags, degenerate geometry).
// The CLI maps these to usage-error exit status 2; everything else that
// escapes is a verification failure (exit 1).
struct InputError : Error {
    using Error::Error;
};

// poly_model
struct ParseError : InputError { using InputError::InputError; };
struct OddEdgeCount : InputError { using InputError::InputError; };
struct CollinearFrame : InputError { using InputError::InputError; };
struct UnsupportedRotation : InputError { using InputError::InputError; };

// gordan_lp
struct DimensionMismatch : InputError { using InputError::InputError; };
struct NegativeEntry : InputError { using InputError::InputError; };
struct ZeroVector : InputError { using InputError::InputError; };
struct InternalContradiction : Error { using Error::Error; };

// superbridge
struct NonGenericDirection : InputError {
    int edge;  // 1-based index of the first offending edge
    NonGenericDirection(const std::string& what, int e)
        : InputError(what), edge(e) {}
};
struct NoGenericDirectionFound : Error { using Error::Error; };
struct NotCoprime : InputError { using InputError::InputError; };
struct BadRange : InputError { using InputError::InputError; };

// projection_diagram
struct PlanarInput : InputError { using InputError::InputError; };
struct NoGenericProjection : InputError { using InputError::InputError; };

// wirtinger
struct UnresolvableStrand : InputError { using InputError::InputError; };
struct NotSurjective : Error { using Error::Error; };

// verdict
struct InconsistentLedger : Error { using Error::Error; };
struct MissingFixture : InputError { using InputError::InputError; };

}  // namespace gordian
