#pragma once

#include <string>
#include <vector>

#include "fraclab/catalog.hpp"
#include "fraclab/constants.hpp"
#include "fraclab/norms.hpp"
#include "fraclab/operators.hpp"

namespace fraclab::lab {

using funcspace::CatalogEntry;
using funcspace::ScalarFunction;
using funcspace::VerySimpleFunction;
using norms::PsiFunction;
using quadrature::QuadratureSpec;

/// One point of an empirical operator-norm sweep.
struct RatioSample {
  double p = 0.0;
  double q = 0.0;
  double ratio = 0.0;  // output norm / input norm, a certified lower bound
  std::string witness;
};

/// Computed quantity against its analytic envelope; the lab's unit of evidence.
struct BracketReport {
  double quantity = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool passed = false;
  std::string context;
};

enum class Endpoint { toward_one, toward_inv_alpha };

/// Norm of entry's function; the closed form when one is attached, quadrature
/// otherwise. Divergence is the +inf signal.
double catalog_lp_norm(const CatalogEntry& entry, double p, double alpha,
                       const QuadratureSpec& spec);

/// Pointwise evaluator of the Riesz potential of a catalog function wrapped
/// as a ScalarFunction with the annotations the norm layer needs. Evaluations
/// are memoized.
ScalarFunction riesz_image(const CatalogEntry& entry, double alpha,
                           const QuadratureSpec& spec);

/// Likewise for the Riemann-Liouville integral.
ScalarFunction rl_image(const CatalogEntry& entry, double alpha,
                        const QuadratureSpec& spec);

/// Fractional derivative of a catalog function as a ScalarFunction; the
/// closed form when known, the Marchaud evaluator otherwise.
ScalarFunction derivative_image(const CatalogEntry& entry, double alpha,
                                const QuadratureSpec& spec);

/// max over the family of |R_alpha f|_{q(p)} / |f|_p at q = sobolev_q(p).
/// Every sample is a certified lower bound for the operator norm.
RatioSample empirical_k_lower(double alpha, double p,
                              const std::vector<CatalogEntry>& family,
                              const QuadratureSpec& spec);

/// Sweep toward an endpoint: distances d give p = 1 + d or alpha p = 1 - d.
std::vector<RatioSample> ratio_sweep(const CatalogEntry& witness, double alpha,
                                     const std::vector<double>& distances,
                                     Endpoint endpoint,
                                     const QuadratureSpec& spec);

/// Two-sided bracket for the Lp norm of the exact indicator derivative:
/// width^{1/p-alpha} (1-alpha p)^{-1/p} <= |.|_p <= 3 * the same.
BracketReport verify_indicator_bracket(double alpha, double p, double h1,
                                       double h2, const QuadratureSpec& spec);

/// Grand-Lebesgue bound for the indicator derivative against
/// theta = (1-alpha p)^{-1/p} * zeta: ||.||_Gtheta <= 3 width^{-alpha} phi(Gzeta, width).
BracketReport verify_gls_indicator(double alpha, double h1, double h2,
                                   const PsiFunction& zeta,
                                   const QuadratureSpec& spec);

/// Spline bound: |Gamma(1-alpha) f^(alpha)|_p <= 3 h^{1/p-alpha-1} (1-alpha p)^{-1/p} |f|_1.
BracketReport verify_vs_bound(const VerySimpleFunction& f, double alpha,
                              double p, const QuadratureSpec& spec);

/// |D^alpha f|_p / (Besov norm of f); bounded by 1/Gamma(1-alpha).
double besov_ratio(const CatalogEntry& entry, double alpha, double p, double b,
                   const QuadratureSpec& spec);

/// ||R_alpha f||_{G psi_K} <= ||f||_{G psi} with the transported generator.
BracketReport verify_gls_sobolev(const CatalogEntry& entry,
                                 const PsiFunction& psi, double alpha,
                                 const QuadratureSpec& spec);

/// ||D^alpha f||_{G psi^(beta)} <= 1/Gamma(1-alpha) against the Besov natural
/// generator on (1, beta).
BracketReport verify_prop51(const CatalogEntry& entry, double alpha,
                            double beta, const QuadratureSpec& spec);

/// Mixed ratio equals the product of the 1-d ratios on factorable inputs;
/// the left side runs through the iterated 2-d norm route.
BracketReport verify_factorization(const CatalogEntry& g1,
                                   const CatalogEntry& g2, double alpha,
                                   double beta, double p1, double p2,
                                   const QuadratureSpec& spec);

/// Least-squares slope of log(ratio) against log(distance to the endpoint).
/// Needs at least 5 samples. The distance is recovered from the sample's own
/// (p, q) pair: p - 1 toward one, p/q toward 1/alpha.
double blowup_slope(const std::vector<RatioSample>& samples,
                    Endpoint endpoint);

/// Weighted-potential sweep on the bracket's admissible p-interval.
/// Throws std::domain_error when the interval (p_minus, p_plus] is empty,
/// which is the case for every (alpha, beta, gamma) in the valid box.
std::vector<BracketReport> verify_weighted_bracket(
    double alpha, double beta, double gamma,
    const std::vector<CatalogEntry>& family, const std::vector<double>& p_grid,
    const QuadratureSpec& spec);

/// Informational variant used by the diagnostics: sweeps the weighted ratio
/// on a caller-supplied (p, q(p)) grid and reports the fitted slope against
/// log(p - p_ref). Asserts nothing.
struct WeightedSweep {
  std::vector<RatioSample> samples;
  double slope = 0.0;
  double p_ref = 0.0;
};
WeightedSweep weighted_ratio_sweep(double alpha, double beta, double gamma,
                                   const std::vector<CatalogEntry>& family,
                                   const std::vector<double>& p_grid,
                                   const QuadratureSpec& spec);

}  // namespace fraclab::lab
