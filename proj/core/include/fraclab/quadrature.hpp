#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace fraclab::quadrature {

/// Endpoint annotation meaning "no singularity here".
inline constexpr double kSmooth = std::numeric_limits<double>::infinity();

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 1 << 14;  // cap on panels in the finest composite mesh
  // Mesh grading strength toward annotated singular endpoints.
  // <= 0 selects the default 3/(1 + endpoint exponent) per endpoint.
  double grading_exponent = 0.0;

  void validate() const;
};

struct Integration {
  double value = 0.0;
  double error = 0.0;  // estimate of the absolute error
  int panels = 0;      // panels in the accepted mesh
};

using Integrand = std::function<double(double)>;

/// Strictly increasing nodes on [a, b] clustering at the flagged endpoint,
/// schedule t_k = (k/(n-1))^exponent. n is the node count, n >= 2.
std::vector<double> graded_mesh(double a, double b, int n, double exponent,
                                bool toward_left);

/// Integral over (a, b) of an integrand with integrable power singularities
/// at the endpoints: |f| ~ |x - a|^exp_a near a (exp_a > -1, kSmooth if none)
/// and likewise at b. Composite Gauss-Kronrod panels on graded meshes,
/// refined until two successive meshes agree within tolerance.
Integration integrate(const Integrand& f, double a, double b, double exp_a,
                      double exp_b, const QuadratureSpec& spec);

/// Improper integral over (a, inf), a > 0. decay_hint is a power-law bound
/// f ~ x^decay_hint with decay_hint < -1. Slowly decaying tails are handled
/// in log coordinates, fast ones through the substitution x = a/t.
Integration integrate_to_infinity(const Integrand& f, double a,
                                  double decay_hint,
                                  const QuadratureSpec& spec);

/// Integral over (u0, inf) of a decaying integrand, swept in fixed-width
/// windows until the contributions become negligible. Used for integrals in
/// log coordinates whose mass can sit hundreds of e-folds from the origin.
Integration integrate_log_windows(const Integrand& f, double u0,
                                  const QuadratureSpec& spec);

/// integrate(), but pieces spanning many orders of magnitude (b/a large)
/// are transformed to log coordinates first. Power-type endpoint exponents
/// survive the substitution unchanged.
Integration integrate_piece(const Integrand& f, double a, double b,
                            double exp_a, double exp_b,
                            const QuadratureSpec& spec);

}  // namespace fraclab::quadrature
