#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "nhydro/specfun.hpp"

using namespace nhydro::specfun;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("gamma: exact values and the recursion") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rel(gamma_fn(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
  // Gamma(7.5) built up from Gamma(0.5) by Gamma(z+1) = z Gamma(z)
  double g = std::sqrt(std::numbers::pi);
  for (double z = 0.5; z < 7.0; z += 1.0) {
    g *= z;
  }
  CHECK(rel(gamma_fn(7.5), g) < 1e-13);
  CHECK(rel(gamma_fn(0.1), 9.5135076986687312858) < 1e-13);
  CHECK(std::abs(log_gamma(200.0) - log_gamma(199.0) - std::log(199.0)) < 1e-12);
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(172.0), std::overflow_error);
}

TEST_CASE("laguerre: low degrees and reference values") {
  CHECK(laguerre_eval({0, 2.0}, 1.5) == 1.0);
  CHECK(laguerre_eval({1, 2.0}, 1.0) == doctest::Approx(2.0));
  // mpmath, 30 digits
  CHECK(rel(laguerre_eval({5, 3.0}, 2.0), -4.2666666666666666667) < 1e-13);
  CHECK(rel(laguerre_eval({7, 2.5}, 11.0), 6.4315522693452380952) < 1e-12);
  CHECK(rel(laguerre_eval({12, 0.0}, 20.0), -3381.258564480786703) < 1e-11);
  CHECK(rel(laguerre_eval({3, 1.0}, 0.5), 1.4791666666666666667) < 1e-14);
  CHECK_THROWS(laguerre_eval({-1, 0.0}, 1.0));
  CHECK(static_cast<double>(laguerre_eval_ext({7, 2.5}, 11.0L)) ==
        doctest::Approx(laguerre_eval({7, 2.5}, 11.0)).epsilon(1e-13));
}

TEST_CASE("laguerre: weighted norm") {
  const nhydro::quad::QuadratureSpec q;
  CHECK(std::abs(laguerre_weighted_norm({0, 0.0}, q).value - 1.0) < 1e-12);
  CHECK(std::abs(laguerre_weighted_norm({2, 1.0}, q).value - 3.0) < 1e-11);
  const auto r = laguerre_weighted_norm({4, 2.5}, q);
  CHECK(r.converged);
  CHECK(rel(r.value, gamma_fn(7.5) / 24.0) < 1e-10);
}

TEST_CASE("gegenbauer: low degrees, references and contiguous relation") {
  CHECK(gegenbauer_eval({0, 1.5}, 0.7) == 1.0);
  CHECK(gegenbauer_eval({1, 2.0}, 0.5) == doctest::Approx(2.0));
  CHECK(rel(gegenbauer_eval({4, 2.5}, 0.3), -1.5430624999999996485) < 1e-13);
  CHECK(rel(gegenbauer_eval({7, 1.5}, -0.8), 5.0294880000000008448) < 1e-13);
  CHECK(rel(gegenbauer_eval({3, 0.75}, 0.9), 1.1458125000000002014) < 1e-13);
  CHECK_THROWS(gegenbauer_eval({2, 0.0}, 0.1));
  CHECK_THROWS(gegenbauer_eval({2, -0.5}, 0.1));

  CHECK(std::abs(gegenbauer_contiguous_residual(1, 2.0, 0.0)) < 1e-15);
  CHECK(std::abs(gegenbauer_contiguous_residual(3, 2.5, 0.4)) < 1e-12);
  CHECK(std::abs(gegenbauer_contiguous_residual(6, 3.5, -0.9)) <
        1e-12 * gegenbauer_contiguous_scale(6, 3.5, -0.9));
  // The relation rearranged gives C_{n+1}^{(a-1)}.
  const double a = 2.5;
  const double x = 0.3;
  const double lhs = gegenbauer_eval({4, a - 1.0}, x);
  const double rhs = (a - 1.0) * (gegenbauer_eval({4, a}, x) - gegenbauer_eval({2, a}, x)) / (3 + a);
  CHECK(rel(lhs, rhs) < 1e-13);
}

TEST_CASE("gegenbauer: orthogonality by Gauss-Legendre in theta") {
  const auto& rule = nhydro::quad::gauss_legendre(64);
  const double a = 1.5;
  for (int m = 0; m <= 4; ++m) {
    for (int n = m + 1; n <= 5; ++n) {
      double s = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = 0.5 * std::numbers::pi * (1.0 + rule.nodes[i]);
        const double x = std::cos(t);
        s += 0.5 * std::numbers::pi * rule.weights[i] * std::pow(std::sin(t), 2 * a) *
             gegenbauer_eval({m, a}, x) * gegenbauer_eval({n, a}, x);
      }
      CHECK(std::abs(s) < 1e-12);
    }
  }
}

TEST_CASE("gegenbauer: generating expansion") {
  CHECK(gegenbauer_generating_expansion(0, 3, 0.5, 0.0, 10) == 0.0);
  CHECK(std::abs(gegenbauer_generating_expansion(0, 3, 0.3, 0.2, 40)) < 1e-10);
  CHECK(std::abs(gegenbauer_generating_expansion(2, 5, -0.6, 0.1, 40)) < 1e-10);
  CHECK_THROWS(gegenbauer_generating_expansion(0, 3, 0.3, 1.0, 40));
}

TEST_CASE("hermite: low degrees, references and Rodrigues finite differences") {
  CHECK(hermite_eval(0, 3.7) == 1.0);
  CHECK(hermite_eval(1, 0.5) == doctest::Approx(1.0));
  CHECK(rel(hermite_eval(6, 1.2), 112.57497600000002817) < 1e-13);
  CHECK(rel(hermite_eval(10, -0.7), 38802.826035097599199) < 1e-12);
  // H_n = (-1)^n e^{x^2} d^n/dx^n e^{-x^2}; for n = 2 a central difference.
  const double x = 1.2;
  const double h = 1e-3;
  auto g = [](double t) { return std::exp(-t * t); };
  const double d2 = (g(x + h) - 2 * g(x) + g(x - h)) / (h * h);
  CHECK(rel(std::exp(x * x) * d2, hermite_eval(2, x)) < 1e-5);
}

TEST_CASE("bessel: reference values across the three regimes") {
  struct Case {
    double nu, x, j;
  };
  // mpmath, 30 digits
  const Case cases[] = {
      {0.0, 1.0, 0.76519768655796655145},   {0.5, 2.0, 0.51301613656182775167},
      {2.5, 3.0, 0.41271003220971599344},   {7.5, 80.0, 0.021217790973270434566},
      {0.3, 17.2, -0.18726238499795865519}, {4.0, 35.0, -0.1343663660127652038},
      {1.5, 12.0, -0.20466344849652968759}, {10.5, 40.0, 0.06623123551101201399},
      {3.5, 600.0, -0.032554727846895200811}, {0.0, 25.5, 0.14406215754684786173},
  };
  for (const auto& c : cases) {
    CAPTURE(c.nu);
    CAPTURE(c.x);
    CHECK(rel(bessel_j_eval({c.nu}, c.x), c.j) < 1e-12);
    CHECK(std::abs(static_cast<double>(bessel_j_eval_ext({c.nu}, c.x)) - c.j) < 1e-15);
  }
  CHECK(bessel_j_eval({1.5}, 0.0) == 0.0);
  CHECK(bessel_j_eval({0.0}, 0.0) == 1.0);
  CHECK_THROWS(bessel_j_eval({-1.0}, 1.0));
  CHECK_THROWS(bessel_j_eval({0.5}, -1.0));
}

TEST_CASE("bessel: half-integer orders match spherical Bessel closed forms") {
  for (double x = 0.25; x < 45.0; x += 0.75) {
    const double s = std::sqrt(2.0 / (std::numbers::pi * x));
    const double j05 = s * std::sin(x);
    const double j15 = s * (std::sin(x) / x - std::cos(x));
    CHECK(std::abs(bessel_j_eval({0.5}, x) - j05) < 1e-13);
    CHECK(std::abs(bessel_j_eval({1.5}, x) - j15) < 1e-13);
  }
}

TEST_CASE("bessel: series and Miller paths agree where both are valid") {
  for (double nu : {0.0, 0.3, 2.5, 6.0}) {
    for (double x : {0.5, 3.0, 7.5}) {
      const double a = bessel_j_series({nu}, x);
      const double b = bessel_j_miller({nu}, x);
      CHECK(std::abs(a - b) <= 1e-11 * std::max(std::abs(a), 1e-3));
    }
  }
  for (double nu : {0.0, 1.5, 3.0}) {
    for (double x : {40.0, 90.0}) {
      CHECK(std::abs(bessel_j_asymptotic({nu}, x) - bessel_j_miller({nu}, x)) < 1e-13);
    }
  }
}

TEST_CASE("bessel: agrees with the standard library") {
  for (double nu : {0.0, 0.5, 1.0, 2.5, 4.5}) {
    for (double x = 0.1; x < 50.0; x += 1.3) {
      CHECK(std::abs(bessel_j_eval({nu}, x) - std::cyl_bessel_j(nu, x)) < 1e-12);
    }
  }
}

TEST_CASE("bessel: scaled kernel agrees with J / x^s on both sides of its series switch") {
  for (double nu : {0.5, 1.5, 2.5}) {
    const double s = 0.5;
    for (double x : {0.999e-3, 1.001e-3}) {
      CHECK(rel(bessel_j_scaled({nu}, s, x), bessel_j_eval({nu}, x) / std::pow(x, s)) < 1e-14);
    }
    CHECK(rel(bessel_j_scaled({nu}, s, 2.0), bessel_j_eval({nu}, 2.0) / std::pow(2.0, s)) < 1e-15);
  }
  CHECK(bessel_j_scaled({0.5}, 0.5, 0.0) == doctest::Approx(std::sqrt(2.0 / std::numbers::pi)));
  CHECK_THROWS(bessel_j_scaled({0.5}, 1.0, 1.0));
}
