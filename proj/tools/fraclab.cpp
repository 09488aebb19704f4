// fraclab: command-line front end for the fractional-operator library and
// its inequality lab. CSV goes to stdout, diagnostics to stderr.
// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
// domain error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fraclab/catalog.hpp"
#include "fraclab/constants.hpp"
#include "fraclab/errors.hpp"
#include "fraclab/lab.hpp"
#include "fraclab/norms.hpp"
#include "fraclab/operators.hpp"
#include "fraclab/special.hpp"

namespace {

using fraclab::lab::BracketReport;
using fraclab::funcspace::CatalogEntry;
using fraclab::quadrature::QuadratureSpec;

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Output {
  bool jsonl = false;
  std::vector<std::string> columns;

  void header(const std::string& context) const {
    if (jsonl) return;
    std::printf("# %s\n", context.c_str());
    for (std::size_t i = 0; i < columns.size(); ++i)
      std::printf("%s%s", i ? "," : "", columns[i].c_str());
    std::printf("\n");
  }
  void row(const std::vector<std::string>& vals) const {
    if (jsonl) {
      std::printf("{");
      for (std::size_t i = 0; i < columns.size() && i < vals.size(); ++i)
        std::printf("%s\"%s\":\"%s\"", i ? "," : "", columns[i].c_str(),
                    vals[i].c_str());
      std::printf("}\n");
    } else {
      for (std::size_t i = 0; i < vals.size(); ++i)
        std::printf("%s%s", i ? "," : "", vals[i].c_str());
      std::printf("\n");
    }
  }
};

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  std::string spacing = "linear";
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto next = s.find(':', pos);
    parts.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.size() < 3)
    throw CLI::ValidationError("grid", "expected start:stop:count[:spacing]");
  g.start = std::stod(parts[0]);
  g.stop = std::stod(parts[1]);
  g.count = std::stoi(parts[2]);
  if (parts.size() > 3) g.spacing = parts[3];
  if (g.count < 1) throw CLI::ValidationError("grid", "count must be >= 1");
  return g;
}

std::vector<double> expand_grid(const GridSpec& g) {
  std::vector<double> xs;
  if (g.count == 1) {
    xs.push_back(g.start);
    return xs;
  }
  for (int i = 0; i < g.count; ++i) {
    const double t = static_cast<double>(i) / (g.count - 1);
    if (g.spacing == "log") {
      xs.push_back(g.start * std::pow(g.stop / g.start, t));
    } else if (g.spacing == "endpoint-geometric") {
      // cluster geometrically toward the stop endpoint
      const double d0 = g.stop - g.start;
      xs.push_back(g.stop - d0 * std::pow(2.0, -4.0 * t));
    } else {
      xs.push_back(g.start + (g.stop - g.start) * t);
    }
  }
  return xs;
}

int run_verify_reports(const std::vector<BracketReport>& reports, double alpha,
                       double p, double q, const Output& out,
                       const std::string& context) {
  Output o = out;
  o.columns = {"alpha", "p", "q", "quantity", "lower", "upper", "passed"};
  o.header(context);
  bool all = true;
  for (const auto& r : reports) {
    o.row({fmt(alpha), fmt(p), fmt(q), fmt(r.quantity), fmt(r.lower),
           fmt(r.upper), r.passed ? "true" : "false"});
    all = all && r.passed;
    if (!r.context.empty()) std::fprintf(stderr, "%s\n", r.context.c_str());
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional-operator laboratory"};
  app.require_subcommand(1);

  QuadratureSpec spec;
  std::string format = "csv";
  int seed = 0;  // reserved: every method in the tool is deterministic
  app.add_option("--rel-tol", spec.rel_tol, "relative quadrature tolerance");
  app.add_option("--abs-tol", spec.abs_tol, "absolute quadrature tolerance");
  app.add_option("--format", format, "csv or json-lines")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--seed", seed, "reserved, unused");

  // ---- apply ----------------------------------------------------------
  auto* apply = app.add_subcommand("apply", "evaluate an operator on a grid");
  std::string op_name, f_spec = "const:1", g_spec;
  double alpha = 0.5, beta = 0.5, gamma = 0.0, xval = NAN, yval = NAN,
         fd_step = 1e-4, h1 = 0.0, h2 = 1.0;
  std::string x_grid;
  apply->add_option("operator", op_name,
                    "rl-integral | marchaud | rl-derivative-fd | "
                    "indicator-derivative | riesz | weighted | "
                    "mixed-integral | mixed-derivative")
      ->required();
  apply->add_option("--f", f_spec, "function spec (see `catalog`)");
  apply->add_option("--g", g_spec, "second factor for mixed operators");
  apply->add_option("--alpha", alpha)->required();
  apply->add_option("--beta", beta);
  apply->add_option("--gamma", gamma);
  apply->add_option("--x", xval);
  apply->add_option("--y", yval);
  apply->add_option("--step", fd_step, "finite-difference step");
  apply->add_option("--h1", h1);
  apply->add_option("--h2", h2);
  apply->add_option("--x-grid", x_grid, "start:stop:count[:spacing]");

  // ---- norm -----------------------------------------------------------
  auto* norm = app.add_subcommand("norm", "norm functionals against p");
  std::string norm_kind = "lp", p_grid;
  double pval = NAN, b_bound = 1.0, delta = 0.1, s1 = 1.1, s2 = 1.9;
  norm->add_option("--f", f_spec)->required();
  norm->add_option("--norm", norm_kind,
                   "lp | besov | modulus | gls-natural")
      ->check(CLI::IsMember({"lp", "besov", "modulus", "gls-natural"}));
  norm->add_option("--p", pval);
  norm->add_option("--p-grid", p_grid);
  norm->add_option("--alpha", alpha);
  norm->add_option("--b", b_bound, "domain bound for the Besov norm");
  norm->add_option("--delta", delta, "shift bound for the modulus");
  norm->add_option("--s1", s1);
  norm->add_option("--s2", s2);

  // ---- constants ------------------------------------------------------
  auto* consts = app.add_subcommand("constants", "envelope tables");
  int dim = 1;
  double stein_s = NAN;
  consts->add_option("--alpha", alpha)->required();
  consts->add_option("--d", dim);
  consts->add_option("--S", stein_s, "Stein constant override");
  consts->add_option("--p-grid", p_grid)->required();

  // ---- verify ---------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "named inequality checks");
  std::string check;
  double p1 = 1.5, p2 = 1.5, beta_gls = 2.0;
  verify->add_option("check", check,
                     "indicator-bracket | gls-indicator | vs-bound | "
                     "besov-ratio | gls-sobolev | prop51 | factorization | "
                     "weighted")
      ->required();
  verify->add_option("--f", f_spec);
  verify->add_option("--g", g_spec);
  verify->add_option("--alpha", alpha);
  verify->add_option("--beta", beta);
  verify->add_option("--gamma", gamma);
  verify->add_option("--p", pval);
  verify->add_option("--p1", p1);
  verify->add_option("--p2", p2);
  verify->add_option("--h1", h1);
  verify->add_option("--h2", h2);
  verify->add_option("--b", b_bound);
  verify->add_option("--s1", s1);
  verify->add_option("--s2", s2);
  verify->add_option("--beta-gls", beta_gls, "upper support bound for prop51");
  verify->add_option("--p-grid", p_grid);

  // ---- sweep ----------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "empirical operator-norm sweep");
  std::string endpoint = "one", family_spec = "f0", distances;
  sweep->add_option("--family", family_spec, "witness function spec");
  sweep->add_option("--alpha", alpha)->required();
  sweep->add_option("--endpoint", endpoint, "one | inv-alpha")
      ->check(CLI::IsMember({"one", "inv-alpha"}));
  sweep->add_option("--distances", distances,
                    "comma-separated distances to the endpoint");

  // ---- catalog --------------------------------------------------------
  auto* cat = app.add_subcommand("catalog", "list the test functions");

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.jsonl = (format == "jsonl");

  try {
    spec.validate();

    if (cat->parsed()) {
      out.columns = {"name"};
      out.header("fraclab catalog");
      for (const auto& n : fraclab::funcspace::catalog_names()) out.row({n});
      return 0;
    }

    if (apply->parsed()) {
      using namespace fraclab::operators;
      const CatalogEntry entry = fraclab::funcspace::parse_entry(f_spec);
      std::vector<double> xs;
      if (!x_grid.empty())
        xs = expand_grid(parse_grid(x_grid));
      else if (!std::isnan(xval))
        xs.push_back(xval);
      else
        throw CLI::ValidationError("apply", "need --x or --x-grid");

      out.columns = {"x", "value", "flag"};
      out.header("fraclab apply " + op_name + " f=" + f_spec +
                 " alpha=" + fmt(alpha));
      const auto f = entry.make(alpha);
      for (double x : xs) {
        double v = 0.0;
        bool flag = false;
        if (op_name == "rl-integral") {
          v = rl_integral(f, alpha, x, spec);
        } else if (op_name == "marchaud") {
          const auto r = marchaud_derivative(f, alpha, x, spec);
          v = r.value;
          flag = r.undefined;
        } else if (op_name == "rl-derivative-fd") {
          v = rl_derivative_fd(f, alpha, x, fd_step, spec);
        } else if (op_name == "indicator-derivative") {
          const auto r = indicator_derivative(h1, h2, alpha, x);
          v = r.value;
          flag = r.undefined;
        } else if (op_name == "riesz") {
          v = riesz_potential_1d(f, alpha, x, spec);
        } else if (op_name == "weighted") {
          v = weighted_potential(f, alpha, beta, gamma, x, spec);
        } else if (op_name == "mixed-integral" || op_name == "mixed-derivative") {
          if (g_spec.empty())
            throw CLI::ValidationError("apply", "mixed operators need --g");
          if (std::isnan(yval))
            throw CLI::ValidationError("apply", "mixed operators need --y");
          const auto g = fraclab::funcspace::parse_entry(g_spec).make(beta);
          if (op_name == "mixed-integral") {
            v = mixed_integral_factorable({f, g}, alpha, beta, x, yval, spec);
          } else {
            const auto r =
                mixed_derivative_factorable({f, g}, alpha, beta, x, yval, spec);
            v = r.value;
            flag = r.undefined;
          }
        } else {
          throw CLI::ValidationError("apply", "unknown operator " + op_name);
        }
        out.row({fmt(x), fmt(v), flag ? "1" : "0"});
      }
      return 0;
    }

    if (norm->parsed()) {
      const CatalogEntry entry = fraclab::funcspace::parse_entry(f_spec);
      std::vector<double> ps;
      if (!p_grid.empty())
        ps = expand_grid(parse_grid(p_grid));
      else if (!std::isnan(pval))
        ps.push_back(pval);
      else
        throw CLI::ValidationError("norm", "need --p or --p-grid");

      out.columns = {"p", "norm_value", "divergent_flag"};
      out.header("fraclab norm " + norm_kind + " f=" + f_spec +
                 " alpha=" + fmt(alpha));
      const auto f = entry.make(alpha);
      for (double p : ps) {
        double v = 0.0;
        if (norm_kind == "lp")
          v = fraclab::norms::lp_norm(f, p, spec);
        else if (norm_kind == "besov")
          v = fraclab::norms::besov_norm(f, alpha, p, b_bound, spec);
        else if (norm_kind == "modulus")
          v = fraclab::norms::modulus_of_continuity(f, delta, p, spec);
        else {  // gls-natural: the natural generator makes the norm 1
          const auto psi = fraclab::norms::natural_psi(f, s1, s2, spec);
          v = fraclab::norms::gls_norm(f, psi, spec);
        }
        const bool div = fraclab::norms::is_divergent(v);
        out.row({fmt(p), fmt(v), div ? "1" : "0"});
      }
      return 0;
    }

    if (consts->parsed()) {
      const double S = std::isnan(stein_s)
                           ? fraclab::constants::stein_constant(
                                 dim, fraclab::constants::SteinMode::classical)
                           : stein_s;
      out.columns = {"p", "k_upper", "k_lower_shape"};
      out.header("fraclab constants alpha=" + fmt(alpha) + " d=" +
                 std::to_string(dim) + " S=" + fmt(S));
      for (double p : expand_grid(parse_grid(p_grid))) {
        const double ku = fraclab::constants::k_upper(alpha, dim, p, S);
        const double kl = fraclab::constants::k_lower_shape(alpha, p);
        out.row({fmt(p), fmt(ku), fmt(kl)});
      }
      return 0;
    }

    if (verify->parsed()) {
      namespace lab = fraclab::lab;
      const std::string ctx = "fraclab verify " + check;
      if (check == "indicator-bracket") {
        if (std::isnan(pval))
          throw CLI::ValidationError("verify", "indicator-bracket needs --p");
        const auto r = lab::verify_indicator_bracket(alpha, pval, h1, h2, spec);
        return run_verify_reports({r}, alpha, pval, NAN, out, ctx);
      }
      if (check == "gls-indicator") {
        const auto zeta = fraclab::norms::PsiFunction::constant(
            1.0, 1.0, 1.0 / alpha);
        const auto r = lab::verify_gls_indicator(alpha, h1, h2, zeta, spec);
        return run_verify_reports({r}, alpha, NAN, NAN, out, ctx);
      }
      if (check == "vs-bound") {
        if (f_spec.rfind("vs:", 0) != 0)
          throw CLI::ValidationError("verify", "vs-bound needs --f vs:<file>");
        const auto vs = fraclab::funcspace::VerySimpleFunction::from_file(
            f_spec.substr(3));
        if (std::isnan(pval))
          throw CLI::ValidationError("verify", "vs-bound needs --p");
        const auto r = lab::verify_vs_bound(vs, alpha, pval, spec);
        return run_verify_reports({r}, alpha, pval, NAN, out, ctx);
      }
      if (check == "besov-ratio") {
        if (std::isnan(pval))
          throw CLI::ValidationError("verify", "besov-ratio needs --p");
        const auto entry = fraclab::funcspace::parse_entry(f_spec);
        const double ratio = lab::besov_ratio(entry, alpha, pval, b_bound, spec);
        const double bound =
            1.0 / fraclab::special::gamma(1.0 - alpha);
        BracketReport r;
        r.quantity = ratio;
        r.lower = 0.0;
        r.upper = bound;
        r.passed = ratio <= bound * (1.0 + 1e-3);
        return run_verify_reports({r}, alpha, pval, NAN, out, ctx);
      }
      if (check == "gls-sobolev") {
        const auto entry = fraclab::funcspace::parse_entry(f_spec);
        const auto psi =
            fraclab::norms::natural_psi(entry.make(alpha), s1, s2, spec);
        const auto r = lab::verify_gls_sobolev(entry, psi, alpha, spec);
        return run_verify_reports({r}, alpha, NAN, NAN, out, ctx);
      }
      if (check == "prop51") {
        const auto entry = fraclab::funcspace::parse_entry(f_spec);
        const auto r = lab::verify_prop51(entry, alpha, beta_gls, spec);
        return run_verify_reports({r}, alpha, NAN, NAN, out, ctx);
      }
      if (check == "factorization") {
        if (g_spec.empty())
          throw CLI::ValidationError("verify", "factorization needs --g");
        const auto e1 = fraclab::funcspace::parse_entry(f_spec);
        const auto e2 = fraclab::funcspace::parse_entry(g_spec);
        const auto r =
            lab::verify_factorization(e1, e2, alpha, beta, p1, p2, spec);
        return run_verify_reports({r}, alpha, p1, NAN, out, ctx);
      }
      if (check == "weighted") {
        if (p_grid.empty())
          throw CLI::ValidationError("verify", "weighted needs --p-grid");
        std::vector<fraclab::funcspace::CatalogEntry> family = {
            fraclab::funcspace::make_indicator(0.0, 1.0),
            fraclab::funcspace::make_power_alpha(std::min(0.9, beta + 0.25))};
        const auto reports = lab::verify_weighted_bracket(
            alpha, beta, gamma, family, expand_grid(parse_grid(p_grid)), spec);
        return run_verify_reports(reports, alpha, NAN, NAN, out, ctx);
      }
      throw CLI::ValidationError("verify", "unknown check " + check);
    }

    if (sweep->parsed()) {
      namespace lab = fraclab::lab;
      const auto entry = fraclab::funcspace::parse_entry(family_spec);
      std::vector<double> ds;
      if (distances.empty()) {
        for (int k = 2; k <= 7; ++k) ds.push_back(std::pow(2.0, -k) * 0.8);
      } else {
        std::size_t pos = 0;
        while (pos <= distances.size()) {
          const auto next = distances.find(',', pos);
          ds.push_back(std::stod(distances.substr(
              pos, next == std::string::npos ? next : next - pos)));
          if (next == std::string::npos) break;
          pos = next + 1;
        }
      }
      const auto ep = endpoint == "one" ? lab::Endpoint::toward_one
                                        : lab::Endpoint::toward_inv_alpha;
      const auto samples = lab::ratio_sweep(entry, alpha, ds, ep, spec);
      const double S = fraclab::constants::stein_constant(
          1, fraclab::constants::SteinMode::classical);

      out.columns = {"alpha", "p", "q", "quantity", "lower", "upper", "passed"};
      out.header("fraclab sweep family=" + family_spec + " alpha=" + fmt(alpha) +
                 " endpoint=" + endpoint);
      bool all = true;
      for (const auto& s : samples) {
        const double ku = fraclab::constants::k_upper(alpha, 1, s.p, S);
        const bool ok = s.ratio <= ku;
        all = all && ok;
        out.row({fmt(alpha), fmt(s.p), fmt(s.q), fmt(s.ratio), "0", fmt(ku),
                 ok ? "true" : "false"});
      }
      const double slope = lab::blowup_slope(samples, ep);
      const double target = -(1.0 - alpha);
      std::fprintf(stderr, "slope=%s target=%s\n", fmt(slope).c_str(),
                   fmt(target).c_str());
      return all ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 2;
  } catch (const fraclab::DivergenceError& e) {
    std::fprintf(stderr, "divergence: %s\n", e.what());
    return 2;
  } catch (const fraclab::ConvergenceError& e) {
    std::fprintf(stderr, "convergence failure: %s (best %.12g)\n", e.what(),
                 e.best_estimate());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
