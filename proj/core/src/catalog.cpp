#include "fraclab/catalog.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fraclab/special.hpp"

namespace fraclab::funcspace {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_order(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("catalog: order must lie in (0,1)");
}
}  // namespace

CatalogEntry make_indicator(double h1, double h2) {
  const bool step_form = std::isinf(h2);
  if (!(h1 >= 0.0) || !(h1 < h2) || (!step_form && !(h2 <= 1.0)))
    throw std::domain_error("make_indicator: need 0 <= h1 < h2 <= 1 (or h2 = inf)");

  const double cut = step_form ? 1.0 : h2;  // X = (0,1)
  const double width = cut - h1;

  CatalogEntry e;
  e.name = step_form ? "indicator:" + std::to_string(h1) + ",inf"
                     : "indicator:" + std::to_string(h1) + "," + std::to_string(h2);
  e.make = [h1, cut](double) {
    ScalarFunction f(0.0, 1.0,
                     [h1, cut](double x) { return (x > h1 && x < cut) ? 1.0 : 0.0; });
    f.set_support(h1, cut);
    if (h1 > 0.0) f.add_jump(h1);
    if (cut < 1.0) f.add_jump(cut);
    return f;
  };
  e.closed_lp_norm = [width](double p, double) {
    if (!(p >= 1.0)) throw std::domain_error("indicator norm: requires p >= 1");
    return std::pow(width, 1.0 / p);
  };
  e.closed_derivative = [h1, h2](double alpha, double x) {
    require_order(alpha);
    double v = 0.0;
    if (x > h1) v += std::pow(x - h1, -alpha);
    if (!std::isinf(h2) && x > h2) v -= std::pow(x - h2, -alpha);
    return v / special::gamma(1.0 - alpha);
  };
  e.closed_rl_integral = [h1, h2, cut](double alpha, double x) {
    require_order(alpha);
    const double b = std::isinf(h2) ? cut : h2;
    double v = 0.0;
    if (x > h1) v += std::pow(x - h1, alpha);
    if (x > b) v -= std::pow(x - b, alpha);
    return v / special::gamma(1.0 + alpha);
  };
  return e;
}

CatalogEntry make_f0() {
  CatalogEntry e;
  e.name = "f0";
  e.make = [](double) {
    ScalarFunction f(0.0, kInf, [](double x) { return x > 1.0 ? 1.0 / x : 0.0; });
    f.set_support(1.0, kInf);
    f.add_jump(1.0);
    f.set_decay(-1.0);
    return f;
  };
  e.closed_lp_norm = [](double p, double) {
    if (!(p >= 1.0)) throw std::domain_error("f0 norm: requires p >= 1");
    if (p <= 1.0) return kInf;
    return std::pow(p - 1.0, -1.0 / p);
  };
  return e;
}

CatalogEntry make_h_delta(double delta) {
  if (!(delta > 0.0)) throw std::domain_error("make_h_delta: requires delta > 0");
  const double cut = std::exp(-1.0);

  CatalogEntry e;
  e.name = "h_delta:" + std::to_string(delta);
  e.alpha_dependent = true;
  e.make = [delta, cut](double alpha) {
    require_order(alpha);
    ScalarFunction f(0.0, kInf, [delta, alpha, cut](double x) {
      if (!(x > 0.0) || !(x < cut)) return 0.0;
      const double l = -std::log(x);
      return std::pow(x, -alpha) * std::pow(l, delta);
    });
    f.set_support(0.0, cut);
    f.add_singularity(0.0, -alpha);
    f.add_jump(cut);
    return f;
  };
  // exact: |f|_p^p = (1-alpha p)^{-(1+delta p)} * GammaUpper(delta p + 1, 1 - alpha p)
  e.closed_lp_norm = [delta](double p, double alpha) {
    require_order(alpha);
    if (!(p >= 1.0)) throw std::domain_error("h_delta norm: requires p >= 1");
    const double eps = 1.0 - alpha * p;
    if (eps <= 0.0) return kInf;
    const double a = delta * p + 1.0;
    const double lg = (-a) * std::log(eps) + std::log(special::gamma_upper(a, eps));
    return std::exp(lg / p);
  };
  e.norm_asymptotic = [delta](double p, double alpha) {
    const double eps = 1.0 - alpha * p;
    if (eps <= 0.0) return kInf;
    return std::pow(special::gamma(delta * p + 1.0), 1.0 / p) *
           std::pow(eps, -delta - 1.0 / p);
  };
  return e;
}

CatalogEntry make_power_alpha(double s) {
  if (!(s > 0.0) || !(s < 1.0))
    throw std::domain_error("make_power_alpha: requires exponent in (0,1)");

  CatalogEntry e;
  e.name = "power_alpha:" + std::to_string(s);
  e.make = [s](double) {
    ScalarFunction f(0.0, kInf, [s](double x) { return std::pow(x, s - 1.0); });
    f.add_singularity(0.0, s - 1.0);
    f.set_decay(s - 1.0);
    return f;
  };
  e.closed_derivative = [s](double alpha, double x) {
    require_order(alpha);
    if (std::fabs(s - alpha) < 1e-14) return 0.0;  // the annihilated case
    return special::gamma(s) / special::gamma(s - alpha) *
           std::pow(x, s - 1.0 - alpha);
  };
  return e;
}

CatalogEntry make_constant(double c) {
  CatalogEntry e;
  e.name = "const:" + std::to_string(c);
  e.make = [c](double) {
    ScalarFunction f(0.0, kInf, [c](double) { return c; });
    f.set_decay(0.0);
    return f;
  };
  return e;
}

CatalogEntry make_very_simple(const VerySimpleFunction& f) {
  CatalogEntry e;
  e.name = "vs:" + std::to_string(f.blocks()) + "-blocks";
  VerySimpleFunction copy = f;
  e.make = [copy](double) { return copy.as_scalar_function(); };
  e.closed_lp_norm = [copy](double p, double) { return copy.lp_norm(p); };
  e.closed_derivative = [copy](double alpha, double x) {
    require_order(alpha);
    const ScalarFunction d = copy.derivative_scaled(alpha);
    return d(x) / special::gamma(1.0 - alpha);
  };
  return e;
}

CatalogEntry make_endpoint_sum(double delta) {
  CatalogEntry e;
  e.name = "f0+h_delta:" + std::to_string(delta);
  e.alpha_dependent = true;
  const CatalogEntry f0 = make_f0();
  const CatalogEntry hd = make_h_delta(delta);
  e.make = [f0, hd](double alpha) {
    return disjoint_sum(f0.make(alpha), hd.make(alpha));
  };
  // |f0 + h|_p^p = |f0|_p^p + |h|_p^p on disjoint supports
  auto nf = f0.closed_lp_norm;
  auto nh = hd.closed_lp_norm;
  e.closed_lp_norm = [nf, nh](double p, double alpha) {
    const double a = nf(p, alpha), b = nh(p, alpha);
    if (std::isinf(a) || std::isinf(b)) return kInf;
    return std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p);
  };
  return e;
}

CatalogEntry parse_entry(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? std::string() : spec.substr(colon + 1);

  auto parse_real = [&spec](const std::string& s) {
    if (s == "inf") return kInf;
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size())
      throw std::domain_error("catalog: malformed number in '" + spec + "'");
    return v;
  };

  if (head == "f0") return make_f0();
  if (head == "h_delta") return make_h_delta(parse_real(args));
  if (head == "power_alpha") return make_power_alpha(parse_real(args));
  if (head == "const") return make_constant(parse_real(args));
  if (head == "vs") return make_very_simple(VerySimpleFunction::from_file(args));
  if (head == "indicator") {
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::domain_error("catalog: indicator needs h1,h2");
    return make_indicator(parse_real(args.substr(0, comma)),
                          parse_real(args.substr(comma + 1)));
  }
  throw std::domain_error("catalog: unknown function spec '" + spec + "'");
}

std::vector<std::string> catalog_names() {
  return {"f0", "h_delta:<delta>", "indicator:<h1>,<h2>", "power_alpha:<s>",
          "const:<c>", "vs:<file>"};
}

}  // namespace fraclab::funcspace
