#pragma once

#include <limits>

#include "fraclab/funcspace.hpp"
#include "fraclab/quadrature.hpp"

namespace fraclab::operators {

using funcspace::ScalarFunction;
using funcspace::TensorFunction;
using quadrature::QuadratureSpec;

/// Parameter record for the fractional operators.
struct FractionalParams {
  double alpha = 0.5;
  double beta = 0.0;   // mixed / weighted cases
  double gamma = 0.0;  // weighted case
  int dimension = 1;
  double bound = std::numeric_limits<double>::infinity();

  void validate() const;
};

/// Pointwise result of a derivative evaluation. `undefined` marks the
/// convention value: the derivative does not exist at that point and 0 is
/// returned in its place.
struct PointResult {
  double value = 0.0;
  bool undefined = false;
};

/// Riemann-Liouville integral (1/Gamma(alpha)) Int_0^x f(t) (x-t)^{alpha-1} dt.
double rl_integral(const ScalarFunction& f, double alpha, double x,
                   const QuadratureSpec& spec);

/// Marchaud form of the derivative of order alpha:
/// Gamma(1-alpha) D[f](x) = x^{-alpha} f(x) + alpha Int_0^x (f(x)-f(t)) (x-t)^{-1-alpha} dt.
/// At annotated jumps, and when the local integral diverges, returns the
/// convention value 0 with the flag set.
PointResult marchaud_derivative(const ScalarFunction& f, double alpha,
                                double x, const QuadratureSpec& spec);

/// Central finite difference of the Riemann-Liouville convolution; cross-check
/// route only, the Marchaud form is canonical.
double rl_derivative_fd(const ScalarFunction& f, double alpha, double x,
                        double step, const QuadratureSpec& spec);

/// Exact derivative of the indicator of (h1, h2) (h2 may be inf):
/// [ I(x>h1)(x-h1)^{-alpha} - I(x>h2)(x-h2)^{-alpha} ] / Gamma(1-alpha).
PointResult indicator_derivative(double h1, double h2, double alpha, double x);

/// One-dimensional Riesz potential Int f(y) |x-y|^{alpha-1} dy over the
/// support of f (bare kernel, no Gamma normalisation).
double riesz_potential_1d(const ScalarFunction& f, double alpha, double x,
                          const QuadratureSpec& spec);

/// Weighted potential (x^{-gamma}/Gamma(alpha)) Int_0^x y^{-beta} f(y) (x-y)^{alpha-1} dy.
/// beta = gamma = 0 degenerates to rl_integral.
double weighted_potential(const ScalarFunction& f, double alpha, double beta,
                          double gamma, double x, const QuadratureSpec& spec);

/// Mixed fractional integral on a factorable function: I^alpha[g1](x) * I^beta[g2](y).
double mixed_integral_factorable(const TensorFunction& f, double alpha,
                                 double beta, double x, double y,
                                 const QuadratureSpec& spec);

/// Mixed fractional derivative on a factorable function: product of the
/// Marchaud values; the convention flag propagates from either factor.
PointResult mixed_derivative_factorable(const TensorFunction& f, double alpha,
                                        double beta, double x, double y,
                                        const QuadratureSpec& spec);

}  // namespace fraclab::operators
