#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fraclab::funcspace {

/// Power-type behaviour marker: |f(x)| ~ |x - point|^exponent near `point`.
/// Exponent 0 marks a non-smooth point without power blow-up (e.g. a
/// logarithmic factor); quadrature still grades its meshes there.
struct Singularity {
  double point;
  double exponent;
};

/// A real function on an interval with singularity and jump annotations.
/// Evaluation outside the domain extends by zero. The annotations must cover
/// every non-smooth point a quadrature routine may meet.
class ScalarFunction {
 public:
  using Rule = std::function<double(double)>;

  ScalarFunction();  // identically zero on (0, inf)
  ScalarFunction(double lower, double upper, Rule rule);

  ScalarFunction& add_singularity(double point, double exponent);
  ScalarFunction& add_jump(double point);
  ScalarFunction& set_decay(double exponent);  // f ~ x^exponent as x -> inf
  ScalarFunction& set_support(double lo, double hi);

  double lower() const { return lower_; }
  double upper() const { return upper_; }
  bool unbounded() const;
  double support_lower() const { return support_lo_; }
  double support_upper() const { return support_hi_; }

  const std::vector<Singularity>& singularities() const { return sing_; }
  const std::vector<double>& jumps() const { return jumps_; }
  std::optional<double> decay() const { return decay_; }

  /// Value at x; 0 outside the domain, throws SingularPointError exactly at
  /// an annotated pole.
  double operator()(double x) const;

  bool is_jump_point(double x) const;
  std::optional<double> singular_exponent_at(double x) const;

  /// Sorted annotated points strictly inside (lo, hi).
  std::vector<double> breakpoints_in(double lo, double hi) const;

  ScalarFunction scaled(double c) const;

 private:
  double lower_;
  double upper_;
  double support_lo_;
  double support_hi_;
  Rule rule_;
  std::vector<Singularity> sing_;
  std::vector<double> jumps_;
  std::optional<double> decay_;
};

/// Evaluate with the extension-by-zero convention.
double evaluate(const ScalarFunction& f, double x);

/// Sum of two functions with non-overlapping supports.
ScalarFunction disjoint_sum(const ScalarFunction& a, const ScalarFunction& b);

/// f(x + shift) - f(x), with annotations shifted accordingly and the decay
/// hint sharpened by one power (leading tail terms cancel).
ScalarFunction shift_difference(const ScalarFunction& f, double shift);

/// Factorable function of two variables, H(x, y) = g1(x) g2(y).
struct TensorFunction {
  ScalarFunction g1;
  ScalarFunction g2;
  double operator()(double x, double y) const { return g1(x) * g2(y); }
};

/// Zero-order spline with equal-width steps: sum of c_k over disjoint
/// segments (a_k, a_k + h). Admits exact Lp norms and an exact fractional
/// derivative assembled from the two-term indicator formula.
class VerySimpleFunction {
 public:
  VerySimpleFunction(double step, std::vector<double> left_edges,
                     std::vector<double> coefficients);

  /// Plain-text format: `h` on the first line, then `left_edge coefficient`
  /// pairs, one per line.
  static VerySimpleFunction from_file(const std::string& path);

  double step() const { return step_; }
  std::size_t blocks() const { return edges_.size(); }
  const std::vector<double>& left_edges() const { return edges_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  double lp_norm(double p) const;  // h^{1/p} |c|_p, exact
  double l1_norm() const;

  ScalarFunction as_scalar_function() const;

  /// The exact derivative of order alpha scaled by Gamma(1-alpha):
  /// sum of c_k [ (x-a_k)_+^{-alpha} - (x-a_k-h)_+^{-alpha} ].
  ScalarFunction derivative_scaled(double alpha) const;

 private:
  double step_;
  std::vector<double> edges_;
  std::vector<double> coeffs_;
};

}  // namespace fraclab::funcspace
