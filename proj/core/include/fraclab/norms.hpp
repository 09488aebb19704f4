#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "fraclab/funcspace.hpp"
#include "fraclab/quadrature.hpp"

namespace fraclab::norms {

using funcspace::ScalarFunction;
using funcspace::TensorFunction;
using quadrature::QuadratureSpec;

/// Divergent norms are reported as +inf, not as exceptions.
inline bool is_divergent(double v) { return std::isinf(v); }

/// Generator of a Grand Lebesgue space: psi > 0 on the open support (s1,s2).
class PsiFunction {
 public:
  PsiFunction(double s1, double s2, std::function<double(double)> rule);

  static PsiFunction constant(double value, double s1, double s2);

  double s1() const { return s1_; }
  double s2() const { return s2_; }
  double operator()(double p) const;  // throws outside the support

  PsiFunction scaled(double c) const;

 private:
  double s1_;
  double s2_;
  std::function<double(double)> rule_;
};

/// (integral of |f|^p)^{1/p} over the function's support. Integrable power
/// singularities are handled by graded meshes or, when the mass can sit at
/// exponentially small or large x, in log coordinates. Returns +inf when the
/// annotations show divergence.
double lp_norm(const ScalarFunction& f, double p, const QuadratureSpec& spec);

/// Mixed Lebesgue norm of a factorable function: |g1|_{p1} |g2|_{p2}.
double mixed_norm(const TensorFunction& f, double p1, double p2,
                  const QuadratureSpec& spec);

/// Iterated-integral route to the same quantity (cross-check path): inner
/// x-integral of |F|^{p1}, raised to p2/p1, integrated in y.
double mixed_norm_iterated(const TensorFunction& f, double p1, double p2,
                           const QuadratureSpec& spec);

/// Lp modulus of continuity with extension by zero: max over the shift grid
/// {delta k/32, k=1..32} of |f(.+h) - f(.)|_p.
double modulus_of_continuity(const ScalarFunction& f, double delta, double p,
                             const QuadratureSpec& spec);

struct BesovBreakdown {
  double value = 0.0;
  double weighted_term = 0.0;  // |x^{-alpha} f|_p
  double modulus_term = 0.0;   // alpha * integral of t^{-1-alpha} omega(f,t)_p
  double tail_part = 0.0;      // extrapolated contribution of t < t_min
  double tail_exponent = 0.0;  // measured local exponent of omega near t_min
};

/// Modified Besov norm |x^{-alpha} f|_p + alpha Int_0^b t^{-1-alpha} w(f,t)_p dt.
/// The t-integral runs from t_min = 1e-8 with a measured-power extrapolation
/// below; the breakdown records the extrapolated share.
BesovBreakdown besov_norm_detail(const ScalarFunction& f, double alpha,
                                 double p, double b,
                                 const QuadratureSpec& spec);
double besov_norm(const ScalarFunction& f, double alpha, double p, double b,
                  const QuadratureSpec& spec);

/// sup over q in supp psi of |f|_q / psi(q), endpoints clipped by 1e-4.
double gls_norm(const ScalarFunction& f, const PsiFunction& psi,
                const QuadratureSpec& spec);

/// psi(p) = |f|_p on (s1, s2), lazily evaluated and memoized.
PsiFunction natural_psi(const ScalarFunction& f, double s1, double s2,
                        const QuadratureSpec& spec);

/// phi(G psi, delta) = sup_p delta^{1/p} / psi(p).
double fundamental_function(const PsiFunction& psi, double delta);

/// psi(p) = Besov norm of f of order alpha on (1, beta), memoized.
PsiFunction besov_natural_psi(const ScalarFunction& f, double alpha,
                              double beta, const QuadratureSpec& spec);

/// Bracketed 1-d maximizer used for the suprema above (grid scan with a
/// golden-section polish; dense 256-point rescan if the scan looks
/// multimodal). Exposed for reuse by the lab.
double maximize_over_interval(const std::function<double(double)>& fn,
                              double lo, double hi);

}  // namespace fraclab::norms
