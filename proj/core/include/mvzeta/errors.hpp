// Error taxonomy shared by every module.
//
// Each class maps onto one exit code of the command-line tool:
//   DomainError (and subclasses)  -> 2
//   AccuracyError                 -> 3
//   ResourceError                 -> 4
//   IoError                       -> 5
#pragma once

#include <stdexcept>
#include <string>

namespace mvzeta {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested too close to a pole.
class PoleError : public DomainError {
 public:
  PoleError(const std::string& what, double pole, double distance)
      : DomainError(what), pole_(pole), distance_(distance) {}
  double pole() const noexcept { return pole_; }
  double distance() const noexcept { return distance_; }

 private:
  double pole_;
  double distance_;
};

/// The evaluator exists but does not cover this region of the s-plane.
class UnsupportedRegionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// |t| <= 2 pi x / C violated for a truncated lattice evaluation.
class TruncationValidityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested tolerance not reached; carries the achieved error bound.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// A configured resource budget (lattice points, series length) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvzeta
