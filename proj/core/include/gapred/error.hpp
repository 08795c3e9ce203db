#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gapred {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sizes of two arguments disagree (ordering vs graph, assignment vs formula).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input is outside the domain of an operation (non-simple graph, wrong clause
/// width, unbalanced digraph, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exact solver was asked to work beyond its configured size cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t size, std::size_t cap)
      : Error(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// A randomized construction gave up (e.g. expander degree ceiling reached).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gapred
