#pragma once

#include <stdexcept>
#include <string>

namespace forcelab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-range ids, mismatched ambient sizes, malformed inputs to an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Generator or construction parameters outside their validated range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Input too large for a desk-scale exact routine (caps are configurable).
class UnsupportedError : public Error {
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

}  // namespace forcelab
