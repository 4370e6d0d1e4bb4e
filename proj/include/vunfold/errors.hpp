#pragma once

#include <stdexcept>
#include <string>

namespace vunfold {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The input complex (or file) violates a precondition or fails validation.
struct InvalidInputError : Error {
    using Error::Error;
};

/// Positioned parse failure for OFF/OBJ/JSON readers.
struct ParseError : InvalidInputError {
    int line = 0;
    int column = 0;

    ParseError(const std::string& msg, int line_, int column_ = 0)
        : InvalidInputError(msg + " (line " + std::to_string(line_) +
                            (column_ > 0 ? ", column " + std::to_string(column_) : "") + ")"),
          line(line_),
          column(column_) {}
};

/// A vertex star is not a single edge-connected chain or cycle, so no
/// rotation order exists there.
struct NonManifoldStarError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

/// A facet cycle was demanded but cannot exist for this input.  The
/// `reason()` string names which exceptional case applies.
struct CycleImpossibleError : Error {
    CycleImpossibleError(std::string reason, const std::string& msg)
        : Error(msg), reason_(std::move(reason)) {}

    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
};

struct CheckeredPolygonError : CycleImpossibleError {
    explicit CheckeredPolygonError(const std::string& msg)
        : CycleImpossibleError("CheckeredPolygon", msg) {}
};

struct SingleSimplexError : CycleImpossibleError {
    explicit SingleSimplexError(const std::string& msg)
        : CycleImpossibleError("SingleSimplex", msg) {}
};

struct NonSimplicial2ManifoldError : CycleImpossibleError {
    explicit NonSimplicial2ManifoldError(const std::string& msg)
        : CycleImpossibleError("NonSimplicial2Manifold", msg) {}
};

/// An internal invariant failed.  Outputs are never emitted in this state.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace vunfold
