#ifndef ITERCON_ERROR_HPP
#define ITERCON_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace itercon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ordinal or sentence text. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error("parse error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class NonCanonical : public Error {
 public:
  using Error::Error;
};

class NotASuccessor : public Error {
 public:
  using Error::Error;
};

class NotALimit : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

class StageCapExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownSchematicAtom : public Error {
 public:
  using Error::Error;
};

class NotLetterless : public Error {
 public:
  using Error::Error;
};

class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

/// A caller violated an operation's documented precondition (bad bound, horizon, cap).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace itercon

#endif  // ITERCON_ERROR_HPP
