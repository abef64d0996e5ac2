#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gil {

/// Root of every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; `position()` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A group (or lattice) is larger than a configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : Error(what + " " + std::to_string(size) + " exceeds cap " +
              std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// Lookup of an unknown inequality id, group name or printed tuple.
class UnknownName : public Error {
 public:
  using Error::Error;
};

/// Subgroups of two different groups were combined. Always a caller bug.
class MismatchedParents : public std::logic_error {
 public:
  MismatchedParents() : std::logic_error("subgroups belong to different groups") {}
};

}  // namespace gil
