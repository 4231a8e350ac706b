#pragma once

#include <stdexcept>
#include <string>

namespace approxlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Descriptor parameters out of range (non-prime p, bad dimension, ...).
struct InvalidDescriptor : Error {
    using Error::Error;
};

/// An element payload violates its family's canonical-form invariants.
struct InvalidElement : Error {
    using Error::Error;
};

/// Two operands belong to different group contexts.
struct ContextMismatch : Error {
    using Error::Error;
};

struct IncompatibleFamilies : Error {
    using Error::Error;
};

/// Checked 64-bit arithmetic overflowed; the computation needs smaller inputs.
struct OverflowError : Error {
    using Error::Error;
};

/// An enumeration crossed the configured element cap.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct NotSymmetric : Error {
    using Error::Error;
};

struct MissingIdentity : Error {
    using Error::Error;
};

struct EmptyIntersection : Error {
    using Error::Error;
};

struct NotGenerating : Error {
    using Error::Error;
};

struct TooLargeForExact : Error {
    using Error::Error;
};

/// Malformed CLI input, spec string, or element file.
struct ParseError : Error {
    using Error::Error;
};

} // namespace approxlab
