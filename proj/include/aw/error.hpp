#pragma once

#include <stdexcept>
#include <string>

namespace aw {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class InvalidConfig : public Error {
  public:
    using Error::Error;
};

class OutOfRange : public Error {
  public:
    using Error::Error;
};

class BasisMismatch : public Error {
  public:
    BasisMismatch() : Error("operators act on different bases") {}
};

class ConsistencyError : public Error {
  public:
    using Error::Error;
};

} // namespace aw
