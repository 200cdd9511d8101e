#pragma once

#include <stdexcept>
#include <string>

namespace locsys {

/// Base class of every error raised by the library. The CLI maps all of
/// them to exit code 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands live over different fields") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class CharacteristicTooSmall : public Error {
public:
    CharacteristicTooSmall(unsigned long long p, std::size_t dim)
        : Error("characteristic " + std::to_string(p) + " too small: trace-form radical requires p > dim = " +
                std::to_string(dim)) {}
};

class NotSemisimple : public Error {
public:
    using Error::Error;
};

class NonSplit : public Error {
public:
    using Error::Error;
};

class NotPerfect : public Error {
public:
    using Error::Error;
};

class NotAnIdeal : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace locsys
