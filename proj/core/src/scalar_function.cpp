#include "fraclab/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fraclab/errors.hpp"

namespace fraclab::funcspace {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ScalarFunction::ScalarFunction()
    : lower_(0.0),
      upper_(kInf),
      support_lo_(0.0),
      support_hi_(kInf),
      rule_([](double) { return 0.0; }) {
  support_hi_ = 0.0;  // empty support: the zero function
  decay_ = -kInf;
}

ScalarFunction::ScalarFunction(double lower, double upper, Rule rule)
    : lower_(lower),
      upper_(upper),
      support_lo_(lower),
      support_hi_(upper),
      rule_(std::move(rule)) {
  if (!(lower < upper))
    throw std::domain_error("ScalarFunction: requires lower < upper");
  if (!rule_) throw std::domain_error("ScalarFunction: missing rule");
}

ScalarFunction& ScalarFunction::add_singularity(double point, double exponent) {
  if (!(exponent > -1.0))
    throw std::domain_error("ScalarFunction: singularity must be integrable");
  sing_.push_back({point, exponent});
  return *this;
}

ScalarFunction& ScalarFunction::add_jump(double point) {
  jumps_.push_back(point);
  return *this;
}

ScalarFunction& ScalarFunction::set_decay(double exponent) {
  decay_ = exponent;
  return *this;
}

ScalarFunction& ScalarFunction::set_support(double lo, double hi) {
  support_lo_ = std::max(lo, lower_);
  support_hi_ = std::min(hi, upper_);
  return *this;
}

bool ScalarFunction::unbounded() const { return std::isinf(support_hi_); }

double ScalarFunction::operator()(double x) const {
  if (!(x > lower_) || !(x < upper_)) return 0.0;
  if (x < support_lo_ || x > support_hi_) return 0.0;
  for (const auto& s : sing_) {
    if (x == s.point && s.exponent < 0.0)
      throw SingularPointError("ScalarFunction: evaluation at singular point");
  }
  return rule_(x);
}

bool ScalarFunction::is_jump_point(double x) const {
  return std::find(jumps_.begin(), jumps_.end(), x) != jumps_.end();
}

std::optional<double> ScalarFunction::singular_exponent_at(double x) const {
  for (const auto& s : sing_)
    if (s.point == x) return s.exponent;
  return std::nullopt;
}

std::vector<double> ScalarFunction::breakpoints_in(double lo, double hi) const {
  std::vector<double> pts;
  for (const auto& s : sing_)
    if (s.point > lo && s.point < hi) pts.push_back(s.point);
  for (double j : jumps_)
    if (j > lo && j < hi) pts.push_back(j);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

ScalarFunction ScalarFunction::scaled(double c) const {
  ScalarFunction out = *this;
  auto base = rule_;
  out.rule_ = [base, c](double x) { return c * base(x); };
  return out;
}

double evaluate(const ScalarFunction& f, double x) { return f(x); }

ScalarFunction disjoint_sum(const ScalarFunction& a, const ScalarFunction& b) {
  const bool overlap = a.support_lower() < b.support_upper() &&
                       b.support_lower() < a.support_upper();
  if (overlap)
    throw std::domain_error("disjoint_sum: supports overlap");

  const double lo = std::min(a.lower(), b.lower());
  const double hi = std::max(a.upper(), b.upper());
  ScalarFunction out(lo, hi, [a, b](double x) { return a(x) + b(x); });
  out.set_support(std::min(a.support_lower(), b.support_lower()),
                  std::max(a.support_upper(), b.support_upper()));
  for (const auto& s : a.singularities()) out.add_singularity(s.point, s.exponent);
  for (const auto& s : b.singularities()) out.add_singularity(s.point, s.exponent);
  for (double j : a.jumps()) out.add_jump(j);
  for (double j : b.jumps()) out.add_jump(j);
  // the tail belongs to whichever summand reaches infinity
  if (a.unbounded() && a.decay()) out.set_decay(*a.decay());
  if (b.unbounded() && b.decay()) out.set_decay(*b.decay());
  return out;
}

ScalarFunction shift_difference(const ScalarFunction& f, double shift) {
  if (!(shift > 0.0))
    throw std::domain_error("shift_difference: requires a positive shift");
  const double lo = f.support_lower() - shift;
  const double hi = f.support_upper();
  ScalarFunction out(lo - 1.0, std::isinf(hi) ? hi : hi + 1.0,
                     [f, shift](double x) { return f(x + shift) - f(x); });
  out.set_support(lo, hi);
  for (const auto& s : f.singularities()) {
    out.add_singularity(s.point, s.exponent);
    out.add_singularity(s.point - shift, s.exponent);
  }
  for (double j : f.jumps()) {
    out.add_jump(j);
    out.add_jump(j - shift);
  }
  if (f.decay()) out.set_decay(*f.decay() - 1.0);
  return out;
}

VerySimpleFunction::VerySimpleFunction(double step,
                                       std::vector<double> left_edges,
                                       std::vector<double> coefficients)
    : step_(step), edges_(std::move(left_edges)), coeffs_(std::move(coefficients)) {
  if (!(step_ > 0.0))
    throw std::domain_error("VerySimpleFunction: step must be positive");
  if (edges_.size() != coeffs_.size())
    throw std::domain_error("VerySimpleFunction: edges/coefficients mismatch");
  std::vector<std::size_t> order(edges_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [this](std::size_t i, std::size_t j) { return edges_[i] < edges_[j]; });
  std::vector<double> e, c;
  e.reserve(edges_.size());
  c.reserve(coeffs_.size());
  for (std::size_t i : order) {
    e.push_back(edges_[i]);
    c.push_back(coeffs_[i]);
  }
  edges_ = std::move(e);
  coeffs_ = std::move(c);
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
    if (edges_[i + 1] < edges_[i] + step_ - 1e-12)
      throw std::domain_error("VerySimpleFunction: segments overlap");
  }
}

VerySimpleFunction VerySimpleFunction::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("VerySimpleFunction: cannot open " + path);
  double h = 0.0;
  if (!(in >> h))
    throw std::runtime_error("VerySimpleFunction: missing step on line 1");
  std::vector<double> edges, coeffs;
  double a, c;
  while (in >> a >> c) {
    edges.push_back(a);
    coeffs.push_back(c);
  }
  return VerySimpleFunction(h, std::move(edges), std::move(coeffs));
}

double VerySimpleFunction::lp_norm(double p) const {
  if (!(p >= 1.0))
    throw std::domain_error("VerySimpleFunction::lp_norm: requires p >= 1");
  double s = 0.0;
  for (double c : coeffs_) s += std::pow(std::fabs(c), p);
  return std::pow(step_, 1.0 / p) * std::pow(s, 1.0 / p);
}

double VerySimpleFunction::l1_norm() const {
  double s = 0.0;
  for (double c : coeffs_) s += std::fabs(c);
  return step_ * s;
}

ScalarFunction VerySimpleFunction::as_scalar_function() const {
  const auto edges = edges_;
  const auto coeffs = coeffs_;
  const double h = step_;
  const double hi = edges.empty() ? 1.0 : edges.back() + h;
  ScalarFunction out(0.0, std::max(1.0, hi) + 1.0, [edges, coeffs, h](double x) {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (x > edges[i] && x < edges[i] + h) return coeffs[i];
    return 0.0;
  });
  out.set_support(edges.empty() ? 0.0 : edges.front(), hi);
  for (double e : edges) {
    out.add_jump(e);
    out.add_jump(e + h);
  }
  return out;
}

ScalarFunction VerySimpleFunction::derivative_scaled(double alpha) const {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("derivative_scaled: requires alpha in (0,1)");
  const auto edges = edges_;
  const auto coeffs = coeffs_;
  const double h = step_;
  const double last = edges.empty() ? 0.0 : edges.back() + h;
  ScalarFunction out(0.0, std::max(1.0, last + 1.0),
                     [edges, coeffs, h, alpha](double x) {
                       double v = 0.0;
                       for (std::size_t i = 0; i < edges.size(); ++i) {
                         if (x > edges[i]) v += coeffs[i] * std::pow(x - edges[i], -alpha);
                         const double b = edges[i] + h;
                         if (x > b) v -= coeffs[i] * std::pow(x - b, -alpha);
                       }
                       return v;
                     });
  for (double e : edges) {
    out.add_singularity(e, -alpha);
    out.add_singularity(e + h, -alpha);
  }
  return out;
}

}  // namespace fraclab::funcspace
