#pragma once

#include "fraclab/norms.hpp"

namespace fraclab::constants {

using norms::PsiFunction;

/// Exponent pair under the Sobolev relation 1/q = 1/p - alpha/d.
struct SobolevPair {
  double p;
  double q;
  double alpha;
  int dimension;
};

/// q(p) from 1/q = 1/p - alpha/d; requires 1 < p < d/alpha.
double sobolev_q(double p, double alpha, int d);

/// Inverse map p(q).
double sobolev_p(double q, double alpha, int d);

SobolevPair make_sobolev_pair(double p, double alpha, int d);

enum class SteinMode { classical, flat };

/// Maximal-operator constant: classical bound 2 * 5^d, or a flat absolute
/// constant (default 2).
double stein_constant(int d, SteinMode mode, double flat_value = 2.0);

/// Envelope prefactor, continuous on the closed segment p in [1, 1/alpha]:
/// Omega(d)^{-1-alpha/d} p^{1-2 alpha p/d} d^{1+(1-alpha p)/d} S^{1-alpha p}.
double v2(double alpha, int d, double p, double S);

/// Upper envelope for the operator-norm ratio:
/// v2 * alpha^{-1} / [(p-1)(1-alpha p)]^{1-alpha/d}. Infinite at the
/// endpoints of (1, min(d/alpha, 1/alpha)).
double k_upper(double alpha, int d, double p, double S);

/// Lower-envelope shape [(p-1)(1-alpha p)]^{-(1-alpha)} with the unknown
/// level normalised to 1; only the blow-up exponent is meaningful.
double k_lower_shape(double alpha, double p);

/// Parameter bracket of the weighted potential. Note that for every valid
/// (alpha, beta, gamma) the displayed interval (p_minus, p_plus] is empty:
/// p_minus < p_plus would force alpha > 1. admissible() reports this.
struct WeightedBracket {
  double kappa;
  double p_minus;
  double p_plus;
  double q_minus;  // +inf when alpha + gamma <= 1
  double q_plus;

  bool admissible() const { return p_minus < p_plus; }
  double envelope(double p) const;  // (p - p_minus)^{-kappa}
};

WeightedBracket weighted_bracket(double alpha, double beta, double gamma);

/// Transport of a generator along the Sobolev map, using the upper envelope
/// as a surrogate for the unknown sharp constant:
/// psi_K(q) = k_upper(p(q)) * psi(p(q)) on the image of supp psi.
PsiFunction transported_psi(const PsiFunction& psi, double alpha, int d,
                            double S);

}  // namespace fraclab::constants
