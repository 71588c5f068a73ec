#pragma once

#include <stdexcept>
#include <string>

namespace zec {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotSquareError : public Error {
public:
  using Error::Error;
};

class NotHermitianError : public Error {
public:
  using Error::Error;
};

class RankDeficientError : public Error {
public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

class NotTracePreservingError : public Error {
public:
  NotTracePreservingError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_;
};

class NotAPartitionError : public Error {
public:
  using Error::Error;
};

class SizeCapExceededError : public Error {
public:
  using Error::Error;
};

class NonConvergenceError : public Error {
public:
  NonConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_;
};

class ParameterOutOfRangeError : public Error {
public:
  using Error::Error;
};

/// JSON / expression syntax errors, with a 1-based source position.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Numerical sanity violations (probability clamps, sum checks).
class NumericsError : public Error {
public:
  using Error::Error;
};

}  // namespace zec
