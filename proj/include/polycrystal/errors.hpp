#pragma once

#include <stdexcept>
#include <string>

namespace polycrystal {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCartan : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidIota : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

// sigma_0 requested on a point living in the B(infinity) crystal.
class ModeError : public Error {
 public:
  using Error::Error;
};

// wt / epsilon / phi requested on the ideal element 0.
class ZeroElement : public Error {
 public:
  using Error::Error;
};

class NotAmple : public Error {
 public:
  using Error::Error;
};

class StrictPositivityViolated : public Error {
 public:
  using Error::Error;
};

class IncompleteEnumeration : public Error {
 public:
  using Error::Error;
};

class NotFiniteType : public Error {
 public:
  using Error::Error;
};

// A BFS-reached point failed the inequality system it was checked against.
class CrossValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace polycrystal
