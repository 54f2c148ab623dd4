#pragma once

#include <stdexcept>

namespace aggtree {

/// Base for recoverable failures caused by the caller's data.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class MalformedTree : public Error {
 public:
  MalformedTree() : Error("malformed tree") {}
  explicit MalformedTree(const std::string& detail) : Error("malformed tree: " + detail) {}
};

class OracleLimit : public Error {
 public:
  OracleLimit() : Error("instance too large for oracle") {}
};

/// A postcondition the library guarantees did not hold. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace aggtree
