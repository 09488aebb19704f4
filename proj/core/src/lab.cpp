#include "fraclab/lab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fraclab/errors.hpp"
#include "fraclab/special.hpp"

namespace fraclab::lab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
using funcspace::Singularity;

double clamp_exponent(double e) { return std::max(e, -0.9999); }

// Memoizing pointwise wrapper around an expensive evaluator.
funcspace::ScalarFunction::Rule memoized(std::function<double(double)> fn) {
  auto memo = std::make_shared<std::map<double, double>>();
  auto guard = std::make_shared<std::mutex>();
  return [memo, guard, fn](double x) {
    {
      std::lock_guard<std::mutex> lock(*guard);
      const auto it = memo->find(x);
      if (it != memo->end()) return it->second;
    }
    const double v = fn(x);
    std::lock_guard<std::mutex> lock(*guard);
    (*memo)[x] = v;
    return v;
  };
}

std::string format_context(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << " ";
    first = false;
    os << k << "=" << v;
  }
  return os.str();
}

// Annotations shared by the potential-type images: behaviour at the origin
// from the input's power there lifted by the order, kinks at the input's
// breakpoints, power tail from the transported mass.
void annotate_potential_image(ScalarFunction& image, const ScalarFunction& f,
                              double lift) {
  const auto s0 = f.singular_exponent_at(0.0);
  if (f.support_lower() == 0.0) {
    const double e0 = (s0 ? *s0 : 0.0) + lift;
    image.add_singularity(0.0, e0 < 0.0 ? clamp_exponent(e0) : 0.0);
  }
  for (double b :
       f.breakpoints_in(f.support_lower(), f.support_upper())) {
    if (b > 0.0) image.add_jump(b);
  }
  if (!std::isinf(f.support_upper())) image.add_jump(f.support_upper());
}

}  // namespace

double catalog_lp_norm(const CatalogEntry& entry, double p, double alpha,
                       const QuadratureSpec& spec) {
  if (entry.closed_lp_norm) return entry.closed_lp_norm(p, alpha);
  return norms::lp_norm(entry.make(alpha), p, spec);
}

ScalarFunction riesz_image(const CatalogEntry& entry, double alpha,
                           const QuadratureSpec& spec) {
  const ScalarFunction f = entry.make(alpha);
  ScalarFunction image(
      0.0, kInf,
      memoized([f, alpha, spec](double x) {
        return operators::riesz_potential_1d(f, alpha, x, spec);
      }));
  annotate_potential_image(image, f, alpha);
  image.set_decay(alpha - 1.0);
  image.set_support(0.0, kInf);
  return image;
}

ScalarFunction rl_image(const CatalogEntry& entry, double alpha,
                        const QuadratureSpec& spec) {
  const ScalarFunction f = entry.make(alpha);
  ScalarFunction image(0.0, kInf, [] (double) { return 0.0; });
  if (entry.closed_rl_integral) {
    auto closed = entry.closed_rl_integral;
    image = ScalarFunction(0.0, kInf,
                           [closed, alpha](double x) { return closed(alpha, x); });
  } else {
    image = ScalarFunction(
        0.0, kInf,
        memoized([f, alpha, spec](double x) {
          return operators::rl_integral(f, alpha, x, spec);
        }));
  }
  annotate_potential_image(image, f, alpha);
  image.set_decay(alpha - 1.0);
  image.set_support(std::max(0.0, f.support_lower()), kInf);
  return image;
}

ScalarFunction derivative_image(const CatalogEntry& entry, double alpha,
                                const QuadratureSpec& spec) {
  const ScalarFunction f = entry.make(alpha);
  ScalarFunction image(0.0, kInf, [](double) { return 0.0; });
  if (entry.closed_derivative) {
    auto closed = entry.closed_derivative;
    image = ScalarFunction(0.0, kInf,
                           [closed, alpha](double x) { return closed(alpha, x); });
  } else {
    image = ScalarFunction(
        0.0, kInf,
        memoized([f, alpha, spec](double x) {
          return operators::marchaud_derivative(f, alpha, x, spec).value;
        }));
  }
  // the local term x^{-alpha} f(x) dominates near the origin; jumps of f
  // turn into integrable power singularities of the derivative
  const auto s0 = f.singular_exponent_at(0.0);
  if (f.support_lower() == 0.0)
    image.add_singularity(0.0, clamp_exponent((s0 ? *s0 : 0.0) - alpha));
  for (double j : f.jumps())
    if (j > 0.0) image.add_singularity(j, -alpha);
  for (const auto& s : f.singularities())
    if (s.point > 0.0) image.add_singularity(s.point, clamp_exponent(s.exponent - alpha));
  if (f.decay())
    image.set_decay(*f.decay() - alpha);
  else
    image.set_decay(-1.0 - alpha);  // beyond a bounded support
  image.set_support(std::max(0.0, f.support_lower()), kInf);
  return image;
}

RatioSample empirical_k_lower(double alpha, double p,
                              const std::vector<CatalogEntry>& family,
                              const QuadratureSpec& spec) {
  if (family.empty())
    throw std::domain_error("empirical_k_lower: family is empty");
  const double q = constants::sobolev_q(p, alpha, 1);

  RatioSample best{p, q, -1.0, ""};
  for (const auto& entry : family) {
    double den, num;
    try {
      den = catalog_lp_norm(entry, p, alpha, spec);
      if (norms::is_divergent(den) || !(den > 0.0)) continue;
      num = norms::lp_norm(riesz_image(entry, alpha, spec), q, spec);
      if (norms::is_divergent(num)) continue;
    } catch (const DivergenceError&) {
      continue;
    }
    const double r = num / den;
    if (r > best.ratio) {
      best.ratio = r;
      best.witness = entry.name;
    }
  }
  if (best.ratio < 0.0)
    throw std::domain_error(
        "empirical_k_lower: every family member is divergent at this p");
  return best;
}

std::vector<RatioSample> ratio_sweep(const CatalogEntry& witness, double alpha,
                                     const std::vector<double>& distances,
                                     Endpoint endpoint,
                                     const QuadratureSpec& spec) {
  std::vector<double> ps;
  for (double d : distances) {
    if (!(d > 0.0)) throw std::domain_error("ratio_sweep: distances must be positive");
    ps.push_back(endpoint == Endpoint::toward_one ? 1.0 + d
                                                  : (1.0 - d) / alpha);
  }
  std::sort(ps.begin(), ps.end());
  std::vector<RatioSample> out;
  out.reserve(ps.size());
  for (double p : ps)
    out.push_back(empirical_k_lower(alpha, p, {witness}, spec));
  return out;
}

BracketReport verify_indicator_bracket(double alpha, double p, double h1,
                                       double h2, const QuadratureSpec& spec) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("verify_indicator_bracket: alpha outside (0,1)");
  if (!(p >= 1.0) || !(alpha * p < 1.0))
    throw std::domain_error("verify_indicator_bracket: requires 1 <= p < 1/alpha");
  if (!(h1 >= 0.0) || !(h1 < h2) || !(h2 < 1.0))
    throw std::domain_error("verify_indicator_bracket: requires 0 <= h1 < h2 < 1");

  const double width = h2 - h1;
  const double envelope = std::pow(width, 1.0 / p - alpha) *
                          std::pow(1.0 - alpha * p, -1.0 / p);

  // Gamma(1-alpha)-scaled exact derivative of the indicator on X = (0,1)
  ScalarFunction t(0.0, 1.0, [h1, h2, alpha](double x) {
    double v = 0.0;
    if (x > h1) v += std::pow(x - h1, -alpha);
    if (x > h2) v -= std::pow(x - h2, -alpha);
    return v;
  });
  t.add_singularity(h1, -alpha);
  t.add_singularity(h2, -alpha);
  t.set_support(h1, 1.0);

  BracketReport rep;
  rep.quantity = norms::lp_norm(t, p, spec);
  rep.lower = envelope;
  rep.upper = 3.0 * envelope;
  rep.passed = rep.quantity >= rep.lower * (1.0 - 1e-4) &&
               rep.quantity <= rep.upper * (1.0 + 1e-4);
  rep.context = format_context(
      {{"alpha", alpha}, {"p", p}, {"h1", h1}, {"h2", h2}});
  return rep;
}

BracketReport verify_gls_indicator(double alpha, double h1, double h2,
                                   const PsiFunction& zeta,
                                   const QuadratureSpec& spec) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("verify_gls_indicator: alpha outside (0,1)");
  const double p_max = 1.0 / alpha;
  if (!(zeta.s1() >= 1.0) || !(zeta.s2() <= p_max + 1e-12))
    throw std::domain_error("verify_gls_indicator: supp zeta must lie in (1, 1/alpha)");
  if (!(h1 >= 0.0) || !(h1 < h2) || !(h2 < 1.0))
    throw std::domain_error("verify_gls_indicator: requires 0 <= h1 < h2 < 1");

  const double width = h2 - h1;
  PsiFunction zeta_copy = zeta;
  PsiFunction theta(zeta.s1(), zeta.s2(), [zeta_copy, alpha](double p) {
    return std::pow(1.0 - alpha * p, -1.0 / p) * zeta_copy(p);
  });

  ScalarFunction t(0.0, 1.0, [h1, h2, alpha](double x) {
    double v = 0.0;
    if (x > h1) v += std::pow(x - h1, -alpha);
    if (x > h2) v -= std::pow(x - h2, -alpha);
    return v;
  });
  t.add_singularity(h1, -alpha);
  t.add_singularity(h2, -alpha);
  t.set_support(h1, 1.0);

  BracketReport rep;
  rep.quantity = norms::gls_norm(t, theta, spec);
  rep.lower = 0.0;
  rep.upper = 3.0 * std::pow(width, -alpha) *
              norms::fundamental_function(zeta, width);
  rep.passed = rep.quantity <= rep.upper * (1.0 + 1e-6);
  rep.context = format_context({{"alpha", alpha}, {"h1", h1}, {"h2", h2}});
  return rep;
}

BracketReport verify_vs_bound(const VerySimpleFunction& f, double alpha,
                              double p, const QuadratureSpec& spec) {
  if (!(p >= 1.0) || !(alpha * p < 1.0))
    throw std::domain_error("verify_vs_bound: requires 1 <= p < 1/alpha");

  BracketReport rep;
  rep.quantity = f.blocks() == 0
                     ? 0.0
                     : norms::lp_norm(f.derivative_scaled(alpha), p, spec);
  rep.lower = 0.0;
  rep.upper = 3.0 * std::pow(f.step(), 1.0 / p - alpha - 1.0) *
              std::pow(1.0 - alpha * p, -1.0 / p) * f.l1_norm();
  rep.passed = rep.quantity <= rep.upper * (1.0 + 1e-4);
  rep.context = format_context(
      {{"alpha", alpha}, {"p", p}, {"h", f.step()},
       {"blocks", static_cast<double>(f.blocks())}});
  return rep;
}

double besov_ratio(const CatalogEntry& entry, double alpha, double p, double b,
                   const QuadratureSpec& spec) {
  const ScalarFunction f = entry.make(alpha);
  const double den = norms::besov_norm(f, alpha, p, b, spec);
  if (norms::is_divergent(den))
    throw DivergenceError("besov_ratio: Besov norm divergent");
  if (!(den > 0.0)) throw std::domain_error("besov_ratio: zero Besov norm");

  ScalarFunction d = derivative_image(entry, alpha, spec);
  if (!std::isinf(b)) d.set_support(d.support_lower(), b);
  const double num = norms::lp_norm(d, p, spec);
  if (norms::is_divergent(num))
    throw DivergenceError("besov_ratio: derivative norm divergent");
  return num / den;
}

BracketReport verify_gls_sobolev(const CatalogEntry& entry,
                                 const PsiFunction& psi, double alpha,
                                 const QuadratureSpec& spec) {
  const double S = constants::stein_constant(1, constants::SteinMode::classical);
  const PsiFunction psi_k = constants::transported_psi(psi, alpha, 1, S);

  BracketReport rep;
  rep.quantity = norms::gls_norm(riesz_image(entry, alpha, spec), psi_k, spec);
  rep.lower = 0.0;
  rep.upper = norms::gls_norm(entry.make(alpha), psi, spec);
  rep.passed = rep.quantity <= rep.upper * (1.0 + 1e-6);
  rep.context = format_context(
      {{"alpha", alpha}, {"s1", psi.s1()}, {"s2", psi.s2()}});
  return rep;
}

BracketReport verify_prop51(const CatalogEntry& entry, double alpha,
                            double beta, const QuadratureSpec& spec) {
  const ScalarFunction f = entry.make(alpha);
  const PsiFunction psi_b = norms::besov_natural_psi(f, alpha, beta, spec);

  ScalarFunction d = derivative_image(entry, alpha, spec);
  if (!std::isinf(f.upper())) d.set_support(d.support_lower(), f.upper());

  BracketReport rep;
  rep.quantity = norms::gls_norm(d, psi_b, spec);
  rep.lower = 0.0;
  rep.upper = 1.0 / special::gamma(1.0 - alpha);
  rep.passed = rep.quantity <= rep.upper * (1.0 + 1e-3);
  rep.context = format_context({{"alpha", alpha}, {"beta", beta}});
  return rep;
}

BracketReport verify_factorization(const CatalogEntry& g1,
                                   const CatalogEntry& g2, double alpha,
                                   double beta, double p1, double p2,
                                   const QuadratureSpec& spec) {
  const double q1 = constants::sobolev_q(p1, alpha, 1);
  const double q2 = constants::sobolev_q(p2, beta, 1);

  const ScalarFunction f1 = g1.make(alpha);
  const ScalarFunction f2 = g2.make(beta);
  const ScalarFunction i1 = rl_image(g1, alpha, spec);
  const ScalarFunction i2 = rl_image(g2, beta, spec);

  // iterated 2-d route for the mixed ratio
  const double num_lhs =
      norms::mixed_norm_iterated({i1, i2}, q1, q2, spec);
  const double den_lhs = norms::mixed_norm_iterated({f1, f2}, p1, p2, spec);
  const double lhs = num_lhs / den_lhs;

  // product of the one-dimensional ratios
  const double r1 = norms::lp_norm(i1, q1, spec) / catalog_lp_norm(g1, p1, alpha, spec);
  const double r2 = norms::lp_norm(i2, q2, spec) / catalog_lp_norm(g2, p2, beta, spec);
  const double rhs = r1 * r2;

  BracketReport rep;
  rep.quantity = lhs;
  rep.lower = rhs;
  rep.upper = rhs;
  rep.passed = std::fabs(lhs - rhs) <= 1e-6 * std::fabs(rhs);
  rep.context = format_context({{"alpha", alpha},
                                {"beta", beta},
                                {"p1", p1},
                                {"p2", p2}});
  return rep;
}

double blowup_slope(const std::vector<RatioSample>& samples,
                    Endpoint endpoint) {
  if (samples.size() < 5)
    throw std::domain_error("blowup_slope: needs at least 5 samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(samples.size());
  for (const auto& s : samples) {
    const double d = endpoint == Endpoint::toward_one ? s.p - 1.0 : s.p / s.q;
    if (!(d > 0.0) || !(s.ratio > 0.0))
      throw std::domain_error("blowup_slope: sample outside the fit domain");
    const double x = std::log(d);
    const double y = std::log(s.ratio);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (!(std::fabs(denom) > 0.0))
    throw std::domain_error("blowup_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

namespace {

ScalarFunction weighted_image(const ScalarFunction& f, double alpha,
                              double beta, double gamma,
                              const QuadratureSpec& spec) {
  ScalarFunction image(
      0.0, kInf, memoized([f, alpha, beta, gamma, spec](double x) {
        return operators::weighted_potential(f, alpha, beta, gamma, x, spec);
      }));
  const auto s0 = f.singular_exponent_at(0.0);
  const double e0 = alpha + (s0 ? *s0 : 0.0) - beta - gamma;
  if (f.support_lower() == 0.0 && e0 < 0.0)
    image.add_singularity(0.0, clamp_exponent(e0));
  for (double b : f.breakpoints_in(f.support_lower(), f.support_upper()))
    if (b > 0.0) image.add_jump(b);
  if (!std::isinf(f.support_upper())) image.add_jump(f.support_upper());
  image.set_decay(alpha - 1.0 - gamma);
  image.set_support(std::max(0.0, f.support_lower()), kInf);
  return image;
}

}  // namespace

WeightedSweep weighted_ratio_sweep(double alpha, double beta, double gamma,
                                   const std::vector<CatalogEntry>& family,
                                   const std::vector<double>& p_grid,
                                   const QuadratureSpec& spec) {
  const auto bracket = constants::weighted_bracket(alpha, beta, gamma);
  WeightedSweep out;
  out.p_ref = bracket.p_minus;

  for (double p : p_grid) {
    if (!(1.0 / p > bracket.kappa)) continue;  // q(p) undefined
    const double q = 1.0 / (1.0 / p - bracket.kappa);
    RatioSample best{p, q, -1.0, ""};
    for (const auto& entry : family) {
      try {
        const ScalarFunction f = entry.make(alpha);
        const double den = catalog_lp_norm(entry, p, alpha, spec);
        if (norms::is_divergent(den) || !(den > 0.0)) continue;
        const double num = norms::lp_norm(
            weighted_image(f, alpha, beta, gamma, spec), q, spec);
        if (norms::is_divergent(num)) continue;
        const double r = num / den;
        if (r > best.ratio) {
          best.ratio = r;
          best.witness = entry.name;
        }
      } catch (const DivergenceError&) {
        continue;
      } catch (const ConvergenceError&) {
        continue;
      }
    }
    if (best.ratio > 0.0) out.samples.push_back(best);
  }

  if (out.samples.size() >= 5) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = 0;
    for (const auto& s : out.samples) {
      const double d = s.p - out.p_ref;
      if (!(d > 0.0)) continue;
      const double x = std::log(d);
      const double y = std::log(s.ratio);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      n += 1.0;
    }
    const double denom = n * sxx - sx * sx;
    if (std::fabs(denom) > 0.0) out.slope = (n * sxy - sx * sy) / denom;
  }
  return out;
}

std::vector<BracketReport> verify_weighted_bracket(
    double alpha, double beta, double gamma,
    const std::vector<CatalogEntry>& family, const std::vector<double>& p_grid,
    const QuadratureSpec& spec) {
  const auto bracket = constants::weighted_bracket(alpha, beta, gamma);
  if (!bracket.admissible())
    throw std::domain_error(
        "verify_weighted_bracket: admissible interval (p_minus, p_plus] is "
        "empty for these parameters");

  for (double p : p_grid)
    if (!(p > bracket.p_minus) || !(p <= bracket.p_plus))
      throw std::domain_error(
          "verify_weighted_bracket: p grid outside (p_minus, p_plus]");

  const WeightedSweep sweep =
      weighted_ratio_sweep(alpha, beta, gamma, family, p_grid, spec);

  std::vector<BracketReport> reports;
  for (const auto& s : sweep.samples) {
    BracketReport rep;
    rep.quantity = s.ratio;
    rep.lower = 0.0;
    rep.upper = kInf;
    rep.passed = std::isfinite(s.ratio);
    rep.context = format_context({{"alpha", alpha},
                                  {"beta", beta},
                                  {"gamma", gamma},
                                  {"p", s.p},
                                  {"slope", sweep.slope},
                                  {"kappa", bracket.kappa}});
    reports.push_back(rep);
  }
  return reports;
}

}  // namespace fraclab::lab
