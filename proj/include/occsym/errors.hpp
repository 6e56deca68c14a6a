#pragma once

#include <stdexcept>
#include <string>

namespace occsym {

/// Base class for all validation failures raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class ParityMismatchError : public Error {
public:
    using Error::Error;
};

class OddSizeError : public Error {
public:
    using Error::Error;
};

class NotPermutationError : public Error {
public:
    using Error::Error;
};

class NotSelfInverseError : public Error {
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

class TooSmallError : public Error {
public:
    using Error::Error;
};

class NotBijectionError : public Error {
public:
    using Error::Error;
};

class NotPrimeError : public Error {
public:
    using Error::Error;
};

}  // namespace occsym
