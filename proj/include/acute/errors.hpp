#pragma once

#include <stdexcept>
#include <string>

namespace acute {

/// Input rejected before any computation: odd n, duplicates, bad coordinates,
/// malformed files.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A geometric predicate was asked about a coincident pair of points.
class DegenerateInput : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A caller-side precondition of an internal helper does not hold.
class PreconditionViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Valid input whose size the requested operation does not cover.
class UnsupportedSize : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Something that should be impossible happened. Carries an optional
/// diagnostic dump (JSON text) describing the state at the failure point.
class InternalInvariant : public std::logic_error {
public:
    explicit InternalInvariant(const std::string& what, std::string diagnostics = {})
        : std::logic_error(what), diagnostics_(std::move(diagnostics)) {}

    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string diagnostics_;
};

/// Alternating-path arithmetic does not work out; always a dispatch bug.
class ParityMismatch : public InternalInvariant {
public:
    using InternalInvariant::InternalInvariant;
};

}  // namespace acute
