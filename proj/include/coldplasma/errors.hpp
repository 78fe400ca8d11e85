#pragma once

#include <stdexcept>
#include <string>

namespace coldplasma {

/// Input outside an operation's domain (negative ν, s0 > 1, negative time, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures raised by the solvers themselves.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// F vanished before the requested evaluation time.
class BlowupCrossed : public NumericalError {
 public:
  explicit BlowupCrossed(double t_zero)
      : NumericalError("F vanishes at t = " + std::to_string(t_zero) +
                       " before the requested time"),
        t_zero_(t_zero) {}
  double t_zero() const { return t_zero_; }

 private:
  double t_zero_;
};

class CflViolation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoRoot : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class CrossingBeforeT : public NumericalError {
 public:
  explicit CrossingBeforeT(double t_cross)
      : NumericalError("characteristics cross at t = " +
                       std::to_string(t_cross)),
        t_cross_(t_cross) {}
  double t_cross() const { return t_cross_; }

 private:
  double t_cross_;
};

}  // namespace coldplasma
