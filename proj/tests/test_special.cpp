#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "fraclab/special.hpp"

using namespace fraclab::special;

namespace {
double rel_err(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}
}  // namespace

TEST_CASE("gamma at reference points") {
  CHECK(rel_err(gamma(1.0), 1.0) < 1e-13);
  CHECK(rel_err(gamma(0.5), std::sqrt(M_PI)) < 1e-13);
  CHECK(rel_err(gamma(5.0), 24.0) < 1e-13);
  CHECK(rel_err(gamma(10.0), 362880.0) < 1e-13);
}

TEST_CASE("gamma poles rejected") {
  CHECK_THROWS_AS(gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma(-3.0), std::domain_error);
}

TEST_CASE("gamma recurrence on random arguments") {
  std::mt19937 rng(91);
  std::uniform_real_distribution<double> dist(0.01, 30.0);
  for (int i = 0; i < 100; ++i) {
    const double x = dist(rng);
    CHECK(rel_err(gamma(x + 1.0), x * gamma(x)) < 1e-11);
  }
}

TEST_CASE("gamma against the standard library") {
  for (double x = 0.01; x < 50.0; x += 0.37)
    CHECK(rel_err(gamma(x), std::tgamma(x)) < 2e-13);
}

TEST_CASE("gamma reflection below one half") {
  // Gamma(-0.5) = -2 sqrt(pi)
  CHECK(rel_err(gamma(-0.5), -2.0 * std::sqrt(M_PI)) < 1e-12);
  CHECK(rel_err(gamma(0.25), std::tgamma(0.25)) < 1e-13);
}

TEST_CASE("log_gamma reference and consistency") {
  CHECK(std::fabs(log_gamma(1.0)) < 1e-14);
  CHECK(std::fabs(log_gamma(2.0)) < 1e-14);
  CHECK(rel_err(log_gamma(10.0), 12.801827480081469611) < 1e-12);
  for (double x = 0.01; x < 30.0; x += 0.21)
    CHECK(rel_err(std::exp(log_gamma(x)), gamma(x)) < 1e-10);
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.0), std::domain_error);
}

TEST_CASE("ball volume values and recursion") {
  CHECK(rel_err(ball_volume(1), 2.0) < 1e-13);
  CHECK(rel_err(ball_volume(2), M_PI) < 1e-13);
  CHECK(rel_err(ball_volume(3), 4.0 * M_PI / 3.0) < 1e-13);
  for (int d = 3; d <= 20; ++d)
    CHECK(rel_err(ball_volume(d), ball_volume(d - 2) * 2.0 * M_PI / d) < 1e-12);
  CHECK_THROWS_AS(ball_volume(0), std::domain_error);
}

TEST_CASE("beta function") {
  CHECK(rel_err(beta(1.0, 1.0), 1.0) < 1e-13);
  CHECK(rel_err(beta(0.5, 0.5), M_PI) < 1e-13);
  CHECK(rel_err(beta(2.0, 3.0), 1.0 / 12.0) < 1e-13);
  CHECK_THROWS_AS(beta(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(beta(1.0, -2.0), std::domain_error);
}

TEST_CASE("upper incomplete gamma") {
  // Gamma(1, x) = exp(-x)
  CHECK(rel_err(gamma_upper(1.0, 0.7), std::exp(-0.7)) < 1e-12);
  // Gamma(2, x) = (x + 1) exp(-x)
  CHECK(rel_err(gamma_upper(2.0, 1.3), 2.3 * std::exp(-1.3)) < 1e-12);
  // x -> 0 limit recovers the complete integral
  CHECK(rel_err(gamma_upper(1.7, 1e-12), gamma(1.7)) < 1e-9);
  // complementarity: Gamma(a,x) decreasing in x
  CHECK(gamma_upper(1.2, 0.5) > gamma_upper(1.2, 1.5));
}
