#pragma once

namespace fraclab::special {

/// Gamma function for real x, x not a non-positive integer.
/// Lanczos approximation, reflection formula below 0.5.
double gamma(double x);

/// ln Gamma(x) for x > 0, overflow-safe.
double log_gamma(double x);

/// Volume of the Euclidean unit ball in dimension d >= 1.
double ball_volume(int d);

/// Euler Beta function B(a, b) for a, b > 0, computed through log_gamma.
double beta(double a, double b);

/// Upper incomplete gamma integral of t^{a-1} e^{-t} over (x, inf), a > 0, x >= 0.
double gamma_upper(double a, double x);

}  // namespace fraclab::special
