#pragma once

#include <stdexcept>
#include <string>

namespace topolab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: wrong carrier size, ill-fitting subsets, unknown names.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A family of sets offered as a topology is not closed under union or intersection.
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// Skeleton presentation that does not realize a class-uniform preorder.
class SkeletonError : public Error {
 public:
  using Error::Error;
};

/// Input file problem, anchored to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace topolab
