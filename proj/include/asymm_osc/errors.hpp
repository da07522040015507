#pragma once

#include <stdexcept>
#include <string>

namespace asymm_osc {

// Base for every numerical or precondition failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument sits on a pole (Gamma at non-positive integers, F at odd integers).
class PoleError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of the function.
class DomainError : public Error {
public:
    using Error::Error;
};

// Argument outside the supported evaluation box.
class RangeError : public Error {
public:
    using Error::Error;
};

// Series, root finder or quadrature did not converge within its budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Caller violated a documented precondition (bad s, n == k, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A constructed object failed its own consistency check.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

// Grid too coarse to separate features (zero counting).
class ResolutionError : public Error {
public:
    using Error::Error;
};

} // namespace asymm_osc
