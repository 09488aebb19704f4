#include "fraclab/constants.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fraclab/special.hpp"

namespace fraclab::constants {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_order(double alpha, int d) {
  if (d < 1) throw std::domain_error("constants: dimension must be >= 1");
  if (!(alpha > 0.0) || !(alpha < static_cast<double>(d)))
    throw std::domain_error("constants: order must lie in (0, d)");
}
}  // namespace

double sobolev_q(double p, double alpha, int d) {
  require_order(alpha, d);
  const double p_max = d / alpha;
  if (!(p > 1.0) || !(p < p_max))
    throw std::domain_error("sobolev_q: requires 1 < p < d/alpha");
  return 1.0 / (1.0 / p - alpha / d);
}

double sobolev_p(double q, double alpha, int d) {
  require_order(alpha, d);
  const double q_min = d / (d - alpha);
  if (!(q > q_min))
    throw std::domain_error("sobolev_p: requires q > d/(d-alpha)");
  return 1.0 / (1.0 / q + alpha / d);
}

SobolevPair make_sobolev_pair(double p, double alpha, int d) {
  return {p, sobolev_q(p, alpha, d), alpha, d};
}

double stein_constant(int d, SteinMode mode, double flat_value) {
  if (d < 1) throw std::domain_error("stein_constant: dimension must be >= 1");
  if (mode == SteinMode::classical) return 2.0 * std::pow(5.0, d);
  return flat_value;
}

double v2(double alpha, int d, double p, double S) {
  require_order(alpha, d);
  if (!(S > 0.0)) throw std::domain_error("v2: requires S > 0");
  const double ap = alpha * p;
  if (!(p >= 1.0) || !(ap <= 1.0 + 1e-12))
    throw std::domain_error("v2: requires p in [1, 1/alpha]");
  const double dd = d;
  // product evaluated in log space
  const double lg = (-1.0 - alpha / dd) * std::log(special::ball_volume(d)) +
                    (1.0 - 2.0 * ap / dd) * std::log(p) +
                    (1.0 + (1.0 - ap) / dd) * std::log(dd) +
                    (1.0 - ap) * std::log(S);
  return std::exp(lg);
}

double k_upper(double alpha, int d, double p, double S) {
  require_order(alpha, d);
  const double hi = std::min(d / alpha, 1.0 / alpha);
  if (!(p >= 1.0) || !(p <= hi))
    throw std::domain_error("k_upper: requires p in [1, min(d/alpha, 1/alpha)]");
  if (p == 1.0 || p == hi) return kInf;
  const double denom = (p - 1.0) * (1.0 - alpha * p);
  if (!(denom > 0.0)) return kInf;
  return v2(alpha, d, p, S) / alpha /
         std::pow(denom, 1.0 - alpha / static_cast<double>(d));
}

double k_lower_shape(double alpha, double p) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("k_lower_shape: requires alpha in (0,1)");
  if (!(p >= 1.0) || !(p <= 1.0 / alpha))
    throw std::domain_error("k_lower_shape: requires p in [1, 1/alpha]");
  const double denom = (p - 1.0) * (1.0 - alpha * p);
  if (!(denom > 0.0)) return kInf;
  return std::pow(denom, -(1.0 - alpha));
}

double WeightedBracket::envelope(double p) const {
  if (!(p > p_minus))
    throw std::domain_error("WeightedBracket::envelope: requires p > p_minus");
  return std::pow(p - p_minus, -kappa);
}

WeightedBracket weighted_bracket(double alpha, double beta, double gamma) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("weighted_bracket: requires alpha in (0,1)");
  if (!(beta >= 0.0) || beta >= 1.0 || !(gamma >= 0.0) || gamma >= 1.0)
    throw std::domain_error("weighted_bracket: requires beta, gamma in [0,1)");
  if (!(beta * beta + gamma * gamma > 0.0))
    throw std::domain_error("weighted_bracket: requires beta^2 + gamma^2 > 0");
  if (!(alpha + beta + gamma < 2.0))
    throw std::domain_error("weighted_bracket: requires alpha+beta+gamma < 2");

  WeightedBracket w{};
  w.kappa = 2.0 - alpha - beta - gamma;
  w.p_minus = 1.0 / (1.0 - beta);
  w.p_plus = 1.0 / (2.0 - alpha - beta);
  w.q_minus = (alpha + gamma > 1.0) ? 1.0 / (alpha + gamma - 1.0) : kInf;
  w.q_plus = gamma > 0.0 ? 1.0 / gamma : kInf;
  return w;
}

PsiFunction transported_psi(const PsiFunction& psi, double alpha, int d,
                            double S) {
  require_order(alpha, d);
  const double p_max = d / alpha;
  if (!(psi.s1() >= 1.0) || !(psi.s2() < p_max))
    throw std::domain_error("transported_psi: supp psi must lie inside (1, d/alpha)");

  const double q1 = sobolev_q(psi.s1(), alpha, d);
  const double q2 = sobolev_q(psi.s2(), alpha, d);
  PsiFunction base = psi;
  return PsiFunction(q1, q2, [base, alpha, d, S](double q) {
    const double p = sobolev_p(q, alpha, d);
    return k_upper(alpha, d, p, S) * base(p);
  });
}

}  // namespace fraclab::constants
