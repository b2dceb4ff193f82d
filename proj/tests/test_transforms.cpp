#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nhydro/transforms.hpp"

using namespace nhydro;

TEST_CASE("hankel closed form against quadrature") {
  const quad::QuadratureSpec q;
  for (double nu : {0.0, 0.5, 2.5}) {
    for (double g : {0.5, 2.0}) {
      for (double p : {0.0, 0.7, 3.0}) {
        const double c = transforms::hankel_closed_form({nu}, g, p);
        const auto n = transforms::hankel_numeric({nu}, g, p, q);
        CHECK(n.converged);
        CHECK(std::abs(n.value - c) <= 1e-10 * std::abs(c) + 1e-15);
      }
    }
  }
  // nu = 0, p = 0 reduces to int r e^{-g r} dr = 1 / g^2
  CHECK(transforms::hankel_closed_form({0.0}, 2.0, 0.0) == doctest::Approx(0.25));
  CHECK_THROWS(transforms::hankel_closed_form({-1.0}, 1.0, 1.0));
}

TEST_CASE("radial oracle reproduces the closed momentum function") {
  const quad::QuadratureSpec q;
  for (int N : {3, 4, 7}) {
    for (int n = 1; n <= 4; ++n) {
      for (int l = 0; l < n; ++l) {
        const auto s = hydrogenic::make_state(N, n, l);
        const double d = hydrogenic::scale_params(s).delta;
        for (double p : {0.2 * d, 1.7 * d, 6.0 * d}) {
          const auto r = transforms::radial_fourier_oracle(s, p, q);
          CHECK(r.converged);
          CHECK(std::abs(r.value - hydrogenic::radial_momentum(s, p)) <
                1e-9 * std::abs(hydrogenic::radial_momentum(s, p)) + 1e-14);
        }
      }
    }
  }
}

TEST_CASE("radial oracle at the removable point p = 0") {
  const quad::QuadratureSpec q;
  const auto s1 = hydrogenic::make_state(4, 3, 1);
  CHECK(transforms::radial_fourier_oracle(s1, 0.0, q).value == 0.0);
  const auto s0 = hydrogenic::make_state(3, 2, 0);
  const auto r = transforms::radial_fourier_oracle(s0, 0.0, q);
  CHECK(std::abs(r.value - hydrogenic::radial_momentum(s0, 0.0)) < 1e-10);
  const double tiny = 1e-6 * hydrogenic::scale_params(s0).delta;
  CHECK(transforms::radial_fourier_oracle(s0, tiny, q).small_argument);
}

TEST_CASE("one-dimensional Fourier oracle on a Gaussian") {
  const quad::QuadratureSpec q;
  auto g = [](double x) { return std::exp(-0.5 * x * x); };
  for (double p : {0.0, 0.5, 2.0}) {
    const auto r = transforms::fourier_1d_oracle(g, p, 15.0, q);
    CHECK(std::abs(r.value - std::exp(-0.5 * p * p)) < 1e-13);
  }
  // shifted: e^{-i p} e^{-p^2/2}
  auto h = [](double x) { return std::exp(-0.5 * (x - 1.0) * (x - 1.0)); };
  const auto r = transforms::fourier_1d_oracle(h, 1.3, 16.0, q);
  CHECK(std::abs(r.value - std::polar(std::exp(-0.5 * 1.69), -1.3)) < 1e-13);
}
