#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

/// Base of every error raised by the library. `exit_code()` is the process
/// status the command-line front end reports for it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 3; }
};

/// Malformed or inconsistent input (exit status 2).
class InvalidInput : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

class InvalidCalibration : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Two irrational operands live in different quadratic fields.
class FieldMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class Unsupported : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Degenerate input such as inverting zero (exit status 3).
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// P_b is empty, lower-dimensional or unbounded where a complete fan is needed.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class DegeneratePath : public Error {
 public:
  using Error::Error;
};

/// A secondary point lies on a lower-dimensional cone of Gale generators.
/// `cones` lists the offending generator index sets (0-based).
class OnWall : public Error {
 public:
  OnWall(const std::string& what, std::vector<std::vector<int>> cones)
      : Error(what), cones_(std::move(cones)) {}
  const std::vector<std::vector<int>>& cones() const noexcept { return cones_; }

 private:
  std::vector<std::vector<int>> cones_;
};

}  // namespace gkz
