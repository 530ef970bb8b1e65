#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qscatter {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad strength, k <= 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The closed form hit a vanishing denominator where none should exist.
class NumericDegeneracy : public Error {
 public:
  using Error::Error;
};

/// Input data are inconsistent with the operation (e.g. a non-unitary S-matrix).
class InconsistentInput : public Error {
 public:
  using Error::Error;
};

/// Requested parameters lie outside the regime the method covers.
class OutOfRegime : public Error {
 public:
  using Error::Error;
};

/// Real-root isolation failed; carries the (k, value) scan that was inspected.
class RootIsolationError : public Error {
 public:
  RootIsolationError(const std::string& what, std::vector<std::pair<double, double>> grid)
      : Error(what), grid_(std::move(grid)) {}
  const std::vector<std::pair<double, double>>& grid() const noexcept { return grid_; }

 private:
  std::vector<std::pair<double, double>> grid_;
};

/// A zero of the integrand lies on (or too close to) an integration contour.
class ContourProximityError : public Error {
 public:
  using Error::Error;
};

/// Newton refinement did not converge; carries the last iterate.
class RefinementFailure : public Error {
 public:
  RefinementFailure(const std::string& what, std::complex<double> last)
      : Error(what), last_(last) {}
  std::complex<double> last_iterate() const noexcept { return last_; }

 private:
  std::complex<double> last_;
};

/// A zero was found where no physical pole can sit (Re k != 0 with Im k > 0).
class UnphysicalRoot : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at a pole of a meromorphic function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Integration parameters too coarse for the accuracy contract.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// Sample grid unusable for finite differences.
class InvalidGrid : public Error {
 public:
  using Error::Error;
};

}  // namespace qscatter
