#pragma once

#include <stdexcept>
#include <string>

namespace helmscat {

// Base for everything this library throws.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad profile configuration or data violating [H1]-style constraints.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// Malformed input files (JSON schema, CSV layout).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Numerical failure: step-size underflow, blow-up guard, failed extrapolation.
// Carries the location where the solver gave up when one is meaningful.
class SolverError : public Error {
public:
  SolverError(const std::string& what, double where)
      : Error(what + " (at x = " + std::to_string(where) + ")"), where_(where) {}
  explicit SolverError(const std::string& what) : Error(what), where_(0.0) {}
  double where() const { return where_; }

private:
  double where_;
};

class QuadratureError : public Error {
public:
  explicit QuadratureError(const std::string& what) : Error(what) {}
};

}  // namespace helmscat
