#pragma once

#include <stdexcept>
#include <string>

namespace fraclab {

// Quadrature failed to reach the requested tolerance within the subdivision
// budget. Carries the best estimate obtained so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate,
                   double error_estimate)
      : std::runtime_error(what),
        best_(best_estimate),
        err_(error_estimate) {}

  double best_estimate() const noexcept { return best_; }
  double error_estimate() const noexcept { return err_; }

 private:
  double best_;
  double err_;
};

// The requested integral or transform is genuinely divergent.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation exactly at an annotated singular point of a function.
class SingularPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace fraclab
