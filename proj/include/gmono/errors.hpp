#pragma once

#include <stdexcept>
#include <string>

namespace gmono {

/// Base of every domain failure raised by the library. Input-format problems
/// (malformed JSON, bad flags) use std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Element is a zero divisor, or a resolvent parameter hits the spectrum.
class SingularError : public Error {
public:
    using Error::Error;
};

/// Evaluation outside the declared domain of an analytic function.
class OutOfDomainError : public Error {
public:
    using Error::Error;
};

/// xi1 == xi2, so no pair of separating contours exists.
class DegenerateSpectrumError : public Error {
public:
    using Error::Error;
};

class NoConvergenceError : public Error {
public:
    using Error::Error;
};

/// Polynomial in b has no b-dependence (all coefficients of positive degree vanish).
class DegeneratePolynomialError : public Error {
public:
    using Error::Error;
};

/// Triple fails real independence or the surjectivity condition.
class InvalidTripleError : public Error {
public:
    using Error::Error;
};

} // namespace gmono
