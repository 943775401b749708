#pragma once

#include <stdexcept>
#include <string>

namespace hmclass {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact division by a power of (1+y) left a remainder
struct NotDivisible : Error {
    using Error::Error;
};

// arithmetic between truncated series of different orders
struct OrderMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// two proportional forms define the same hyperplane
struct NotReduced : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct NotMonic : Error {
    using Error::Error;
};

struct UnsupportedDimension : Error {
    using Error::Error;
};

// class has nonzero components above the dimension of the singular locus
struct SupportViolation : Error {
    using Error::Error;
};

struct ExponentOutOfRange : Error {
    using Error::Error;
};

// intersection closure grew past the configured flat cap
struct LatticeLimitExceeded : Error {
    using Error::Error;
};

// two independent derivations of the same quantity disagree
struct CrossCheckError : Error {
    using Error::Error;
};

} // namespace hmclass
