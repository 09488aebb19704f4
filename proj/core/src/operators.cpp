#include "fraclab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fraclab/errors.hpp"
#include "fraclab/special.hpp"

namespace fraclab::operators {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
using quadrature::integrate_piece;
using quadrature::integrate_to_infinity;
using quadrature::kSmooth;

void require_order(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("operators: order must lie in (0,1)");
}

double exponent_at(const ScalarFunction& f, double x) {
  const auto e = f.singular_exponent_at(x);
  return e ? *e : kSmooth;
}

// combine a function exponent with a kernel exponent at a shared endpoint
double combine(double fe, double ke) {
  const double a = fe < kSmooth ? fe : 0.0;
  const double b = ke < kSmooth ? ke : 0.0;
  if (!(fe < kSmooth) && !(ke < kSmooth)) return kSmooth;
  return a + b;
}

std::vector<double> cuts_between(const ScalarFunction& f, double lo, double hi) {
  std::vector<double> cuts;
  cuts.push_back(lo);
  for (double b : f.breakpoints_in(lo, hi)) cuts.push_back(b);
  cuts.push_back(hi);
  return cuts;
}

}  // namespace

void FractionalParams::validate() const {
  require_order(alpha);
  if (beta != 0.0 || gamma != 0.0) {
    if (!(beta >= 0.0) || beta >= 1.0 || !(gamma >= 0.0) || gamma >= 1.0)
      throw std::domain_error("FractionalParams: beta, gamma must lie in [0,1)");
    if (!(alpha + beta + gamma < 2.0))
      throw std::domain_error("FractionalParams: requires alpha+beta+gamma < 2");
  }
  if (dimension < 1)
    throw std::domain_error("FractionalParams: dimension must be >= 1");
  if (!(bound > 0.0))
    throw std::domain_error("FractionalParams: bound must be positive");
}

double rl_integral(const ScalarFunction& f, double alpha, double x,
                   const QuadratureSpec& spec) {
  require_order(alpha);
  if (!(x > 0.0)) throw std::domain_error("rl_integral: requires x > 0");

  const double lo = std::max(0.0, f.support_lower());
  const double hi = std::min(x, f.support_upper());
  if (!(lo < hi)) return 0.0;

  // integrability against the kernel
  const double fe_at_x = exponent_at(f, x);
  if (fe_at_x < kSmooth && !(fe_at_x + alpha - 1.0 > -1.0))
    throw DivergenceError("rl_integral: non-integrable kernel combination");

  const auto cuts = cuts_between(f, lo, hi);
  double total = 0.0;
  const auto integrand = [&f, x, alpha](double t) {
    const double v = f(t);
    return v == 0.0 ? 0.0 : v * std::pow(x - t, alpha - 1.0);
  };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    const double ea = exponent_at(f, a);
    double eb = exponent_at(f, b);
    if (b == x) eb = combine(eb, alpha - 1.0);
    total += integrate_piece(integrand, a, b, ea, eb, spec).value;
  }
  return total / special::gamma(alpha);
}

PointResult marchaud_derivative(const ScalarFunction& f, double alpha,
                                double x, const QuadratureSpec& spec) {
  require_order(alpha);
  if (!(x > 0.0))
    throw std::domain_error("marchaud_derivative: requires x > 0");

  if (f.is_jump_point(x)) return {0.0, true};  // convention at a jump
  if (const auto e = f.singular_exponent_at(x); e && *e < 0.0)
    return {0.0, true};

  double fx;
  try {
    fx = f(x);
  } catch (const SingularPointError&) {
    return {0.0, true};
  }

  const double local = std::pow(x, -alpha) * fx;
  const auto cuts = cuts_between(f, 0.0, x);
  const auto integrand = [&f, fx, x, alpha](double t) {
    const double d = fx - f(t);
    return d == 0.0 ? 0.0 : d * std::pow(x - t, -1.0 - alpha);
  };

  double u = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    const double ea = exponent_at(f, a);
    const bool last = (b == x);
    // on the final panel the difference tames the kernel to (x-t)^{-alpha}
    const double eb = last ? -alpha : exponent_at(f, b);
    try {
      u += integrate_piece(integrand, a, b, ea, eb, spec).value;
    } catch (const ConvergenceError&) {
      if (last) return {0.0, true};  // divergent local integral
      throw;
    } catch (const DivergenceError&) {
      if (last) return {0.0, true};
      throw;
    }
  }
  return {(local + alpha * u) / special::gamma(1.0 - alpha), false};
}

double rl_derivative_fd(const ScalarFunction& f, double alpha, double x,
                        double step, const QuadratureSpec& spec) {
  require_order(alpha);
  if (!(step > 0.0) || !(x - step > 0.0))
    throw std::domain_error("rl_derivative_fd: needs 0 < step < x");

  const auto convolution = [&](double y) {
    const double lo = std::max(0.0, f.support_lower());
    const double hi = std::min(y, f.support_upper());
    if (!(lo < hi)) return 0.0;
    const auto cuts = cuts_between(f, lo, hi);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double a = cuts[i], b = cuts[i + 1];
      const double ea = exponent_at(f, a);
      double eb = exponent_at(f, b);
      if (b == y) eb = combine(eb, -alpha);
      total += integrate_piece(
                   [&f, y, alpha](double t) {
                     const double v = f(t);
                     return v == 0.0 ? 0.0 : v * std::pow(y - t, -alpha);
                   },
                   a, b, ea, eb, spec)
                   .value;
    }
    return total;
  };
  return (convolution(x + step) - convolution(x - step)) /
         (2.0 * step * special::gamma(1.0 - alpha));
}

PointResult indicator_derivative(double h1, double h2, double alpha, double x) {
  require_order(alpha);
  if (!(h1 >= 0.0) || !(h1 < h2))
    throw std::domain_error("indicator_derivative: needs 0 <= h1 < h2");

  if (x == h1 || x == h2) return {0.0, true};
  double v = 0.0;
  if (x > h1) v += std::pow(x - h1, -alpha);
  if (!std::isinf(h2) && x > h2) v -= std::pow(x - h2, -alpha);
  return {v / special::gamma(1.0 - alpha), false};
}

double riesz_potential_1d(const ScalarFunction& f, double alpha, double x,
                          const QuadratureSpec& spec) {
  require_order(alpha);

  const double lo = std::max(f.lower(), f.support_lower());
  const double hi = std::min(f.upper(), f.support_upper());
  if (!(lo < hi)) return 0.0;

  const double fe_at_x = exponent_at(f, x);
  if (fe_at_x < kSmooth && !(fe_at_x + alpha - 1.0 > -1.0))
    throw DivergenceError("riesz_potential_1d: non-integrable at the pole");

  const bool tail = std::isinf(hi);
  std::vector<double> cuts;
  cuts.push_back(lo);
  for (double b : f.breakpoints_in(lo, hi)) cuts.push_back(b);
  if (x > lo && (!tail ? x < hi : true)) cuts.push_back(x);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (!tail) cuts.push_back(hi);

  const auto integrand = [&f, x, alpha](double y) {
    const double v = f(y);
    if (v == 0.0) return 0.0;
    const double r = std::fabs(x - y);
    return v * std::pow(r, alpha - 1.0);
  };

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    double ea = exponent_at(f, a);
    double eb = exponent_at(f, b);
    if (a == x) ea = combine(ea, alpha - 1.0);
    if (b == x) eb = combine(eb, alpha - 1.0);
    total += integrate_piece(integrand, a, b, ea, eb, spec).value;
  }
  if (tail) {
    if (!f.decay())
      throw std::domain_error("riesz_potential_1d: unbounded support needs a decay hint");
    const double hint = *f.decay() + alpha - 1.0;
    if (hint >= -1.0)
      throw DivergenceError("riesz_potential_1d: tail not integrable against the kernel");
    double t0 = std::max(cuts.back(), std::max(1.0, 2.0 * std::fabs(x)));
    if (t0 > cuts.back())
      total += integrate_piece(integrand, cuts.back(), t0,
                         cuts.back() == x ? combine(exponent_at(f, x), alpha - 1.0)
                                          : exponent_at(f, cuts.back()),
                         kSmooth, spec)
                   .value;
    total += integrate_to_infinity(integrand, t0, hint, spec).value;
  }
  return total;
}

double weighted_potential(const ScalarFunction& f, double alpha, double beta,
                          double gamma, double x, const QuadratureSpec& spec) {
  require_order(alpha);
  if (!(beta >= 0.0) || beta >= 1.0 || !(gamma >= 0.0) || gamma >= 1.0)
    throw std::domain_error("weighted_potential: beta, gamma must lie in [0,1)");
  if (!(alpha + beta + gamma < 2.0))
    throw std::domain_error("weighted_potential: requires alpha+beta+gamma < 2");
  if (!(x > 0.0)) throw std::domain_error("weighted_potential: requires x > 0");

  const double lo = std::max(0.0, f.support_lower());
  const double hi = std::min(x, f.support_upper());
  if (!(lo < hi)) return 0.0;

  const auto cuts = cuts_between(f, lo, hi);
  const auto integrand = [&f, x, alpha, beta](double y) {
    const double v = f(y);
    if (v == 0.0) return 0.0;
    return v * std::pow(y, -beta) * std::pow(x - y, alpha - 1.0);
  };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    double ea = exponent_at(f, a);
    double eb = exponent_at(f, b);
    if (a == 0.0) ea = combine(ea, -beta);
    if (b == x) eb = combine(eb, alpha - 1.0);
    if (!(ea >= -1.0) || (ea < kSmooth && ea <= -1.0))
      throw DivergenceError("weighted_potential: weight not integrable at 0");
    total += integrate_piece(integrand, a, b, ea, eb, spec).value;
  }
  return std::pow(x, -gamma) * total / special::gamma(alpha);
}

double mixed_integral_factorable(const TensorFunction& f, double alpha,
                                 double beta, double x, double y,
                                 const QuadratureSpec& spec) {
  const double a = rl_integral(f.g1, alpha, x, spec);
  if (a == 0.0) return 0.0;
  return a * rl_integral(f.g2, beta, y, spec);
}

PointResult mixed_derivative_factorable(const TensorFunction& f, double alpha,
                                        double beta, double x, double y,
                                        const QuadratureSpec& spec) {
  const PointResult a = marchaud_derivative(f.g1, alpha, x, spec);
  if (a.undefined) return {0.0, true};
  const PointResult b = marchaud_derivative(f.g2, beta, y, spec);
  if (b.undefined) return {0.0, true};
  return {a.value * b.value, false};
}

}  // namespace fraclab::operators
