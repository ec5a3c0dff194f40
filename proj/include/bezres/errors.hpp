#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bezres {

/// Base of every error the library throws on a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Inputs share a root (Res = 0 / rational gcd nontrivial).
class NotCoprimeError : public Error {
 public:
  using Error::Error;
};

/// Zero or constant input where positive degree is required.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// p*f + q*g = c relation that does not hold.
class RelationError : public Error {
 public:
  using Error::Error;
};

}  // namespace bezres
