#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace porigami {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// A closure, enumeration or coset table grew past its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " exceeds cap " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Malformed text input. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotPrimePower : public Error {
 public:
  using Error::Error;
};

class NotPGroup : public Error {
 public:
  using Error::Error;
};

class NotGeneratingPair : public Error {
 public:
  using Error::Error;
};

class NotTwoGenerated : public Error {
 public:
  using Error::Error;
};

class MembershipError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class InvalidTwist : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input that does not describe a usable object
/// (unknown family name, unknown generator in a word, bad JSON shape).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace porigami
