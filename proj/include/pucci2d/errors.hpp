#pragma once

#include <stdexcept>
#include <string>

namespace pucci2d {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyInteriorError : Error {
    using Error::Error;
};
struct NonFiniteError : Error {
    using Error::Error;
};
struct EmptyMaskError : Error {
    using Error::Error;
};
struct H1Violation : Error {
    using Error::Error;
};
struct H2Violation : Error {
    using Error::Error;
};
struct H5Violation : Error {
    using Error::Error;
};
struct ComparisonViolation : Error {
    using Error::Error;
};
struct NotPositiveError : Error {
    using Error::Error;
};
struct NoConvergenceError : Error {
    using Error::Error;
};
struct BracketInvalidError : Error {
    using Error::Error;
};
struct NotMonotoneError : Error {
    using Error::Error;
};
struct DivergedError : Error {
    using Error::Error;
};
struct InsufficientNodesError : Error {
    using Error::Error;
};
struct OutsideDomainError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct ReplayMismatchError : Error {
    using Error::Error;
};

}  // namespace pucci2d
