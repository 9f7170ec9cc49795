#pragma once

#include <stdexcept>
#include <string>

namespace narydiff {

// Base of every error thrown by the library. Callers that only care about
// "bad input" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what) : Error(what) {}
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class TooFewPoints : public Error {
 public:
  using Error::Error;
};

class DuplicateRoot : public Error {
 public:
  using Error::Error;
};

class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

}  // namespace narydiff
