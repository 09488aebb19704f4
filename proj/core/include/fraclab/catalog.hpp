#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fraclab/funcspace.hpp"

namespace fraclab::funcspace {

/// A named test function together with whatever closed forms are known for
/// it. Entries whose definition involves the operator order take it as an
/// argument of `make`; the others ignore it.
struct CatalogEntry {
  std::string name;
  bool alpha_dependent = false;

  std::function<ScalarFunction(double alpha)> make;

  /// |f|_p in closed form, or unset. May return +inf for divergent (p, alpha).
  std::function<double(double p, double alpha)> closed_lp_norm;

  /// Exact fractional derivative D^alpha f at x, or unset.
  std::function<double(double alpha, double x)> closed_derivative;

  /// Exact fractional integral I^alpha f at x, or unset.
  std::function<double(double alpha, double x)> closed_rl_integral;

  /// Trend expectation for |f|_p near an endpoint (asymptotic, not exact).
  std::function<double(double p, double alpha)> norm_asymptotic;

  ScalarFunction function(double alpha = 0.5) const { return make(alpha); }
};

/// Indicator of (h1, h2) on X = (0,1). h1 = 0 is allowed; h2 = inf selects
/// the step form I(h1 < x). |f|_p = width^{1/p} with the width measured
/// inside X. Carries the exact two-term derivative and the exact fractional
/// integral.
CatalogEntry make_indicator(double h1, double h2);

/// x^{-1} I(x > 1); |f|_p = (p-1)^{-1/p} for p > 1, divergent otherwise.
CatalogEntry make_f0();

/// x^{-alpha} |ln x|^delta I(0 < x < 1/e); the order alpha is bound at use
/// time. The exact |f|_p uses the upper incomplete gamma integral; the
/// asymptotic trend near alpha p -> 1 is kept separately.
CatalogEntry make_h_delta(double delta);

/// x^{s-1} on (0, inf) for s in (0,1); D^alpha f = Gamma(s)/Gamma(s-alpha)
/// x^{s-1-alpha}, which vanishes identically at alpha = s.
CatalogEntry make_power_alpha(double s);

/// Constant c on (0, inf); all Lp norms divergent. Operator probe input.
CatalogEntry make_constant(double c);

/// Wrap a very simple function; exact norms and derivative attached.
CatalogEntry make_very_simple(const VerySimpleFunction& f);

/// Sum of the f0 and h_delta witnesses (disjoint supports (1,inf), (0,1/e)).
CatalogEntry make_endpoint_sum(double delta);

/// CLI mini-language: `f0`, `h_delta:<d>`, `indicator:<h1>,<h2>`,
/// `power_alpha:<s>`, `const:<c>`, `vs:<file>`.
CatalogEntry parse_entry(const std::string& spec);

std::vector<std::string> catalog_names();

}  // namespace fraclab::funcspace
