#include <cmath>
#include <complex>
#include <cstring>
#include <numbers>

#include "doctest.h"
#include "nhydro/quadrature.hpp"
#include "nhydro/specfun.hpp"

using namespace nhydro::quad;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
  const GaussRule& r = gauss_legendre(16);
  REQUIRE(r.nodes.size() == 16);
  for (int k = 0; k <= 31; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      s += r.weights[i] * std::pow(r.nodes[i], k);
    }
    const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
    CHECK(std::abs(s - exact) < 1e-14);
  }
}

TEST_CASE("gauss-laguerre rule integrates x^k e^{-x} exactly") {
  const GaussRule& r = gauss_laguerre(24);
  double fact = 1.0;
  for (int k = 0; k <= 20; ++k) {
    if (k > 0) {
      fact *= k;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      s += r.weights[i] * std::pow(r.nodes[i], k);
    }
    CHECK(std::abs(s - fact) < 1e-11 * fact);
  }
}

TEST_CASE("serial and parallel composite kernels are bitwise identical") {
  auto f = [](double x) { return std::sin(3.0 * x) * std::exp(-0.1 * x) * std::sqrt(x); };
  const GaussRule& rule = gauss_legendre(kPanelOrder);
  for (int panels : {1, 7, 31, 32, 100, 1000}) {
    const auto a = composite_serial(f, 0.0, 50.0, panels, rule);
    const auto b = composite_parallel(f, 0.0, 50.0, panels, rule);
    CHECK(same_bits(a.value, b.value));
    CHECK(same_bits(a.magnitude, b.magnitude));
  }
  auto g = [](double x) { return std::complex<double>{std::cos(x), std::sin(2 * x)}; };
  const auto c = composite_serial(g, -3.0, 4.0, 64, rule);
  const auto d = composite_parallel(g, -3.0, 4.0, 64, rule);
  CHECK(same_bits(c.value.real(), d.value.real()));
  CHECK(same_bits(c.value.imag(), d.value.imag()));
}

TEST_CASE("integrators return the same bits with and without OpenMP") {
  QuadratureSpec serial;
  serial.parallel = false;
  QuadratureSpec parallel;
  auto f = [](double r) {
    return r * r * std::exp(-0.5 * r) * nhydro::specfun::bessel_j_eval({1.5}, 2.0 * r);
  };
  const auto a = integrate_semi_infinite(f, 0.5, serial, 2.0, 2);
  const auto b = integrate_semi_infinite(f, 0.5, parallel, 2.0, 2);
  CHECK(same_bits(a.value, b.value));
  CHECK(a.nodes_used == b.nodes_used);
}

TEST_CASE("interval and semi-infinite integrals") {
  const QuadratureSpec q;
  const auto a = integrate_interval([](double x) { return std::cos(x); }, 0.0, 20.0, q, 1.0);
  CHECK(a.converged);
  CHECK(std::abs(a.value - std::sin(20.0)) < 1e-13);
  // int_0^inf x^{1/2} e^{-x} dx = Gamma(3/2): the graded first panel handles the sqrt
  const auto b = integrate_semi_infinite([](double x) { return std::sqrt(x) * std::exp(-x); }, 1.0, q);
  CHECK(std::abs(b.value - 0.5 * std::sqrt(std::numbers::pi)) < 1e-12);
  // int_0^inf dp / (1 + p^2) = pi / 2
  const auto c = integrate_algebraic_half_line([](double p) { return 1.0 / (1.0 + p * p); }, 1.0, q);
  CHECK(std::abs(c.value - 0.5 * std::numbers::pi) < 1e-13);
}

TEST_CASE("gauss-laguerre scheme for smooth non-oscillatory integrands") {
  QuadratureSpec q;
  q.scheme = Scheme::GaussLaguerre;
  const auto r = integrate_semi_infinite([](double x) { return x * x * std::exp(-2.0 * x); }, 2.0, q);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 0.25) < 1e-13);
}

TEST_CASE("long double integrator matches the double one on a benign integrand") {
  const QuadratureSpec q;
  const auto a = integrate_semi_infinite([](double x) { return x * std::exp(-x); }, 1.0, q);
  const auto b =
      integrate_semi_infinite_ext([](long double x) { return x * std::exp(-x); }, 1.0, q);
  CHECK(std::abs(a.value - 1.0) < 1e-13);
  CHECK(std::abs(b.value - 1.0) < 1e-13);
}

TEST_CASE("non-convergence is reported, not hidden") {
  QuadratureSpec q;
  q.max_refinements = 1;
  q.node_count = 16;
  q.target_rel_tol = 1e-15;
  const auto r = integrate_interval([](double x) { return std::sin(200.0 * x * x); }, 0.0, 3.0, q);
  CHECK_FALSE(r.converged);
  CHECK(r.error_estimate > 0.0);
  CHECK_THROWS(integrate_interval([](double x) { return x; }, 1.0, 1.0, q));
  CHECK_THROWS(integrate_semi_infinite([](double x) { return x; }, 0.0, q));
}
