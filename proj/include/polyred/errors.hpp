#pragma once

#include <stdexcept>

namespace polyred {

// Every library failure derives from Error; the CLI reports these as domain
// errors (exit code 1) instead of letting them escape.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// Operands living in different cyclotomic fields.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// A bounded search came back empty. This is "not found", never a proof that
// no witness exists.
class NotFound : public Error {
public:
    using Error::Error;
};

}  // namespace polyred
