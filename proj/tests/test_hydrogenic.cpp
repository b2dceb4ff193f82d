#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "nhydro/hydrogenic.hpp"
#include "nhydro/quadrature.hpp"

using namespace nhydro::hydrogenic;
using std::numbers::pi;

TEST_CASE("state validation") {
  CHECK_NOTHROW(make_state(3, 1, 0));
  try {
    make_state(3, 2, 2);
    FAIL("expected throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("must exceed l") != std::string::npos);
  }
  CHECK_THROWS_AS(make_state(2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_state(3, 0, 0), std::invalid_argument);
  HState bad = make_state(4, 3, 1);
  bad.chain.mu = {2, 0};
  CHECK_THROWS_AS(validate_state(bad), std::invalid_argument);
}

TEST_CASE("scale parameters") {
  const auto s = scale_params(make_state(3, 1, 0));
  CHECK(s.delta == 1.0);
  CHECK(s.omega == 2.0);
  CHECK(s.energy == -0.5);
  // E = -1 / (2 (n + (N-3)/2)^2)
  const auto t = scale_params(make_state(5, 3, 1));
  CHECK(t.energy == doctest::Approx(-1.0 / (2.0 * 16.0)));
}

TEST_CASE("N = 3 radial functions match the textbook closed forms") {
  for (double r : {0.0, 0.3, 1.0, 2.5, 7.0}) {
    CHECK(radial_position(make_state(3, 1, 0), r) == doctest::Approx(2.0 * std::exp(-r)).epsilon(1e-14));
    CHECK(radial_position(make_state(3, 2, 0), r) ==
          doctest::Approx((1.0 - r / 2) * std::exp(-r / 2) / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(radial_position(make_state(3, 2, 1), r) ==
          doctest::Approx(r * std::exp(-r / 2) / (2.0 * std::sqrt(6.0))).epsilon(1e-13));
  }
  CHECK(radial_position(make_state(3, 1, 0), 0.0) == doctest::Approx(2.0));
  const HState g = make_state(3, 1, 0);
  for (double p : {0.0, 0.2, 1.0, 4.0}) {
    const double textbook = 2.0 * std::sqrt(2.0) / pi / std::pow(1.0 + p * p, 2);
    CHECK(std::abs(radial_momentum(g, p) - textbook * std::sqrt(4 * pi)) < 1e-14);
  }
}

TEST_CASE("extended-precision radial function agrees with the double one") {
  const HState s = make_state(7, 6, 2);
  for (double r : {0.0, 0.5, 3.0, 20.0, 80.0}) {
    const double a = radial_position(s, r);
    const double b = static_cast<double>(radial_position_ext(s, r));
    CHECK(std::abs(a - b) <= 1e-13 * std::abs(a) + 1e-300);
  }
}

TEST_CASE("momentum radial function against independent Fourier integrals") {
  struct Case {
    int N, n, l;
    double p, value;
  };
  // Radial Fourier integral of R_nl evaluated with mpmath quadrature at 30 digits.
  const Case cases[] = {
      {3, 2, 1, 0.3, 4.9725474445646237759},
      {4, 3, 1, 0.5, 2.3341972587733129791},
      {5, 2, 0, 0.2, -52.650502354213652886},
      {3, 3, 0, 0.1, 24.956966280294611626},
  };
  for (const auto& c : cases) {
    CAPTURE(c.N);
    CAPTURE(c.n);
    CAPTURE(c.l);
    CHECK(std::abs(radial_momentum(make_state(c.N, c.n, c.l), c.p) - c.value) <
          1e-12 * std::abs(c.value));
  }
}

TEST_CASE("momentum radial function: vanishing at p = 0 for l > 0 and the envelope") {
  const HState s = make_state(4, 3, 1);
  CHECK(radial_momentum(s, 0.0) == 0.0);
  CHECK(radial_momentum_envelope(s, 0.0) == 0.0);
  // degree n-l-1 = 1: F / envelope = C_1^{(a)}(x) = 2 a x, a = l + (N-1)/2
  const double delta = scale_params(s).delta;
  const double p = 0.8;
  const double x = momentum_arg(p, delta).x;
  CHECK(radial_momentum(s, p) / radial_momentum_envelope(s, p) ==
        doctest::Approx(2.0 * 2.5 * x).epsilon(1e-13));
  CHECK_THROWS(radial_momentum(s, -1.0));
}

TEST_CASE("momentum wavefunction: phase is (-i)^l") {
  CHECK(momentum_phase(make_state(3, 3, 0)) == std::complex<double>(1, 0));
  CHECK(momentum_phase(make_state(3, 3, 1)) == std::complex<double>(0, -1));
  CHECK(momentum_phase(make_state(3, 3, 2)) == std::complex<double>(-1, 0));
  CHECK(momentum_phase(make_state(5, 4, 3)) == std::complex<double>(0, 1));
}

TEST_CASE("norms in both spaces") {
  const nhydro::quad::QuadratureSpec q;
  for (int N : {3, 6}) {
    for (int n = 1; n <= 4; ++n) {
      for (int l = 0; l < n; ++l) {
        const HState s = make_state(N, n, l);
        const double d = scale_params(s).delta;
        auto pos = [&](double r) { return std::pow(radial_position(s, r), 2) * std::pow(r, N - 1); };
        auto mom = [&](double p) { return std::pow(radial_momentum(s, p), 2) * std::pow(p, N - 1); };
        CHECK(std::abs(nhydro::quad::integrate_semi_infinite(pos, 2 * d, q, 0.0, 2 * n + N).value - 1.0) <
              1e-10);
        CHECK(std::abs(nhydro::quad::integrate_algebraic_half_line(mom, d, q).value - 1.0) < 1e-10);
      }
    }
  }
}

TEST_CASE("generating function: closed form, series pieces and coefficients") {
  CHECK(gamma_param(0.5, 0.0) == doctest::Approx(0.5));
  CHECK(std::abs(laguerre_shifted_generating(1, 4, 1.0, 0.3, 60)) < 1e-12);
  CHECK_THROWS(laguerre_shifted_generating(1, 4, 1.0, 1.0, 60));
  // complex and real overloads agree on the real axis
  const double g = generating_g_closed(1, 4, 0.7, 1.1, 0.35);
  CHECK(std::abs(generating_g_closed(1, 4, 0.7, 1.1, std::complex<double>(0.35, 0.0)) - g) < 1e-15);
  // the z^n coefficient at delta_n, times the prefactor ratio, is F(p)
  for (int N : {3, 5}) {
    for (int n = 1; n <= 4; ++n) {
      for (int l = 0; l < n; ++l) {
        const HState s = make_state(N, n, l);
        const double d = scale_params(s).delta;
        const double p = 0.7 * d;
        const double viaG = generating_coefficient(l, N, d, p, n) * generating_prefactor_ratio(s, p);
        CHECK(std::abs(viaG - radial_momentum(s, p)) < 1e-10 * radial_momentum_envelope(s, p));
      }
    }
  }
  const nhydro::quad::QuadratureSpec q;
  const auto series = generating_g_series(0, 3, 1.0, 0.4, 0.5, 40, q);
  CHECK(std::abs(series.value - generating_g_closed(0, 3, 1.0, 0.4, 0.5)) <
        1e-9 * std::abs(series.value));
}
