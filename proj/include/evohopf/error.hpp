#pragma once

#include <stdexcept>
#include <string>

namespace evohopf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands living in different fields or rings.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// Invalid argument: division by zero, excluded parameter, bad shape.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search would exceed its configured bound.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace evohopf
