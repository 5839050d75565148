#pragma once

#include <stdexcept>
#include <string>

namespace cubefree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with arguments outside its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed as a word over the requested alphabet.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A search proved that the word has no infinite context on the requested side.
class NotExtendableError : public Error {
 public:
  NotExtendableError(const std::string& what, int exhausted_at)
      : Error(what), exhausted_at_(exhausted_at) {}
  int exhausted_at() const noexcept { return exhausted_at_; }

 private:
  int exhausted_at_;
};

/// A desk-scale cap (enumeration size, search budget) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubefree
