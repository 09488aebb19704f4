#include "fraclab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fraclab/errors.hpp"

namespace fraclab::quadrature {

namespace {

// Gauss-Kronrod 7-15 pair on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double kronrod;
  double gauss;
};

Panel gk15(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWgk[7] * fc;
  double g = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    k += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) g += kWg[i / 2] * (f1 + f2);
  }
  if (!std::isfinite(k))
    throw DivergenceError("quadrature: non-finite integrand sample");
  return {k * h, g * h};
}

bool is_smooth(double e) { return !(e < kSmooth); }

// Default grading: 3/(1 + exponent), clamped to the representable range so
// graded nodes never collapse onto the singular endpoint.
double grading_for(double exponent, double requested, int n_side) {
  if (is_smooth(exponent)) return 1.0;
  const double g = requested > 0.0 ? requested : 3.0 / (1.0 + exponent);
  const double cap = 640.0 / std::log(static_cast<double>(std::max(n_side, 2)));
  return std::clamp(g, 1.0, cap);
}

// Graded nodes on [a,b]; n_panels panels, clustering toward `left_end ? a : b`.
void append_graded(std::vector<double>& nodes, double a, double b,
                   int n_panels, double g, bool left_end) {
  const double len = b - a;
  if (left_end) {
    for (int k = 1; k <= n_panels; ++k) {
      const double t = std::pow(static_cast<double>(k) / n_panels, g);
      nodes.push_back(a + len * t);
    }
  } else {
    for (int k = n_panels - 1; k >= 0; --k) {
      const double t = std::pow(static_cast<double>(k) / n_panels, g);
      nodes.push_back(b - len * t);
    }
  }
}

double sum_panels(const Integrand& f, const std::vector<double>& nodes,
                  int* panels_out) {
  double total = 0.0;
  int used = 0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!(nodes[i] < nodes[i + 1])) continue;  // collapsed by grading
    total += gk15(f, nodes[i], nodes[i + 1]).kronrod;
    ++used;
  }
  if (panels_out) *panels_out = used;
  return total;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw std::domain_error("QuadratureSpec: tolerances must be positive");
  if (max_subdivisions < 1)
    throw std::domain_error("QuadratureSpec: max_subdivisions must be >= 1");
}

std::vector<double> graded_mesh(double a, double b, int n, double exponent,
                                bool toward_left) {
  if (n < 2) throw std::domain_error("graded_mesh: need at least two nodes");
  if (!(a < b)) throw std::domain_error("graded_mesh: need a < b");
  std::vector<double> nodes;
  nodes.reserve(static_cast<std::size_t>(n));
  const double len = b - a;
  for (int k = 0; k < n; ++k) {
    const double t = std::pow(static_cast<double>(k) / (n - 1), exponent);
    nodes.push_back(toward_left ? a + len * t : b - len * t);
  }
  if (!toward_left) std::reverse(nodes.begin(), nodes.end());
  nodes.front() = a;
  nodes.back() = b;
  return nodes;
}

Integration integrate(const Integrand& f, double a, double b, double exp_a,
                      double exp_b, const QuadratureSpec& spec) {
  spec.validate();
  if (!(a <= b)) throw std::domain_error("integrate: need a <= b");
  if (a == b) return {0.0, 0.0, 0};
  if (!is_smooth(exp_a) && !(exp_a > -1.0))
    throw std::domain_error("integrate: endpoint exponent at a must be > -1");
  if (!is_smooth(exp_b) && !(exp_b > -1.0))
    throw std::domain_error("integrate: endpoint exponent at b must be > -1");

  const bool sing_a = !is_smooth(exp_a);
  const bool sing_b = !is_smooth(exp_b);

  double prev = 0.0;
  bool have_prev = false;
  double best = 0.0;
  double best_err = std::numeric_limits<double>::infinity();

  for (int n_side = 4; 2 * n_side <= spec.max_subdivisions; n_side *= 2) {
    const double ga = grading_for(exp_a, spec.grading_exponent, n_side);
    const double gb = grading_for(exp_b, spec.grading_exponent, n_side);

    std::vector<double> nodes;
    nodes.reserve(static_cast<std::size_t>(2 * n_side + 2));
    nodes.push_back(a);
    if (sing_a || sing_b) {
      const double mid = 0.5 * (a + b);
      append_graded(nodes, a, mid, n_side, sing_a ? ga : 1.0, true);
      append_graded(nodes, mid, b, n_side, sing_b ? gb : 1.0, false);
    } else {
      append_graded(nodes, a, b, 2 * n_side, 1.0, true);
    }

    int used = 0;
    const double value = sum_panels(f, nodes, &used);
    if (have_prev) {
      const double err = std::fabs(value - prev);
      if (err <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(value)))
        return {value, err, used};
      if (err < best_err) {
        best = value;
        best_err = err;
      }
    }
    prev = value;
    have_prev = true;
  }
  throw ConvergenceError("integrate: tolerance not reached", best, best_err);
}

Integration integrate_log_windows(const Integrand& f, double u0,
                                  const QuadratureSpec& spec) {
  spec.validate();
  constexpr double kWidth = 64.0;
  constexpr int kMaxWindows = 64;

  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol / 16.0;

  double acc = 0.0;
  double err = 0.0;
  int panels = 0;
  int small_run = 0;
  for (int w = 0; w < kMaxWindows; ++w) {
    const double lo = u0 + kWidth * w;
    const Integration part = integrate(f, lo, lo + kWidth, kSmooth, kSmooth, inner);
    acc += part.value;
    err += part.error;
    panels += part.panels;
    const double thresh =
        0.25 * std::max(spec.abs_tol, spec.rel_tol * std::fabs(acc));
    small_run = (std::fabs(part.value) <= thresh) ? small_run + 1 : 0;
    if (small_run >= 2) return {acc, err, panels};
  }
  throw ConvergenceError("integrate_log_windows: tail did not settle", acc, err);
}

Integration integrate_piece(const Integrand& f, double a, double b,
                            double exp_a, double exp_b,
                            const QuadratureSpec& spec) {
  if (a > 0.0 && b > 1e4 * a) {
    const Integrand in_v = [&f](double v) {
      const double y = std::exp(v);
      if (!std::isfinite(y)) return 0.0;
      const double w = f(y);
      return w == 0.0 ? 0.0 : w * y;
    };
    return integrate(in_v, std::log(a), std::log(b), exp_a, exp_b, spec);
  }
  return integrate(f, a, b, exp_a, exp_b, spec);
}

Integration integrate_to_infinity(const Integrand& f, double a,
                                  double decay_hint,
                                  const QuadratureSpec& spec) {
  spec.validate();
  if (!(a > 0.0))
    throw std::domain_error("integrate_to_infinity: requires a > 0");
  if (!(decay_hint < -1.0))
    throw DivergenceError("integrate_to_infinity: decay hint must be < -1");

  if (decay_hint >= -3.0) {
    // slow tail: integrate in u = ln x, where the mass may sit far out
    const Integrand in_u = [&f](double u) {
      const double x = std::exp(u);
      if (!std::isfinite(x)) return 0.0;
      const double v = f(x);
      return v == 0.0 ? 0.0 : v * x;
    };
    return integrate_log_windows(in_u, std::log(a), spec);
  }

  // fast tail: x = a/t maps (a, inf) onto (0, 1)
  const Integrand mapped = [&f, a](double t) {
    const double x = a / t;
    if (!std::isfinite(x)) return 0.0;
    const double v = f(x);
    return v == 0.0 ? 0.0 : v * a / (t * t);
  };
  const double exp0 = -decay_hint - 2.0;  // > -1 by the precondition
  return integrate(mapped, 0.0, 1.0, exp0 > 0.0 ? kSmooth : exp0, kSmooth,
                   spec);
}

}  // namespace fraclab::quadrature
