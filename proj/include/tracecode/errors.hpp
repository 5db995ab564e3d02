#pragma once

#include <stdexcept>

namespace tracecode {

// Base class for every domain error raised by the library. CLI maps these
// to exit status 1; ParseError (and CLI usage errors) map to status 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NotPrimeError : public Error {
public:
    using Error::Error;
};

class ReducibleModulusError : public Error {
public:
    using Error::Error;
};

class NoDefaultModulusError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

class SpecMismatchError : public Error {
public:
    using Error::Error;
};

class DegreeNotDivisibleError : public Error {
public:
    using Error::Error;
};

class NotInSubfieldError : public Error {
public:
    using Error::Error;
};

class ZeroElementError : public Error {
public:
    using Error::Error;
};

class LengthMismatchError : public Error {
public:
    using Error::Error;
};

class TooLargeError : public Error {
public:
    using Error::Error;
};

class ZeroCodeError : public Error {
public:
    using Error::Error;
};

class NotDivisorError : public Error {
public:
    using Error::Error;
};

class NonIntegerSumError : public Error {
public:
    using Error::Error;
};

class NotNormalError : public Error {
public:
    using Error::Error;
};

class GcdNotOneError : public Error {
public:
    using Error::Error;
};

class FactorMismatchError : public Error {
public:
    using Error::Error;
};

class SingularBasisError : public Error {
public:
    using Error::Error;
};

}  // namespace tracecode
