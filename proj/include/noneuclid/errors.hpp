#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace noneuclid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the domain where a formula is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Quadrature ran out of its evaluation budget before meeting the tolerance.
/// The best estimate reached so far is kept for diagnostics.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double value, double err_estimate,
                 std::size_t evals)
      : Error(what), value_(value), err_estimate_(err_estimate), evals_(evals) {}

  double value() const noexcept { return value_; }
  double err_estimate() const noexcept { return err_estimate_; }
  std::size_t evals() const noexcept { return evals_; }

 private:
  double value_;
  double err_estimate_;
  std::size_t evals_;
};

/// The integrand returned NaN or an infinity at an interior node.
class NonFiniteIntegrand : public Error {
 public:
  NonFiniteIntegrand(const std::string& what, double at) : Error(what), at_(at) {}
  double at() const noexcept { return at_; }

 private:
  double at_;
};

}  // namespace noneuclid
