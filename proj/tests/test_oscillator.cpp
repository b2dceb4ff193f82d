#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nhydro/oscillator.hpp"
#include "nhydro/specfun.hpp"
#include "nhydro/transforms.hpp"

using namespace nhydro;
using namespace nhydro::oscillator;

TEST_CASE("psi_x against the Hermite polynomial closed form") {
  const OscParams prm{2.0, 1.5};
  const double mw = 3.0;
  for (int n = 0; n <= 8; ++n) {
    for (double x : {-1.3, 0.0, 0.4, 2.2}) {
      const double xi = std::sqrt(mw) * x;
      const double direct = std::pow(mw / std::numbers::pi, 0.25) /
                            std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0)) *
                            std::exp(-0.5 * xi * xi) * specfun::hermite_eval(n, xi);
      CHECK(std::abs(psi_x({n, prm}, x) - direct) < 1e-13);
    }
  }
  CHECK_THROWS(psi_x({-1, {}}, 0.0));
  CHECK_THROWS(psi_x({0, {0.0, 1.0}}, 0.0));
}

TEST_CASE("Fourier transform of psi_n(x) is (-i)^n psi'_n(p)") {
  const quad::QuadratureSpec q;
  for (const OscParams prm : {OscParams{1.0, 1.0}, OscParams{0.5, 4.0}}) {
    const double hw = 14.0 / std::sqrt(prm.mass * prm.frequency);
    for (int n = 0; n <= 10; ++n) {
      const OscState st{n, prm};
      for (double p : {-2.1, 0.3, 1.7}) {
        const auto ft = transforms::fourier_1d_oracle([&](double x) { return psi_x(st, x); }, p, hw, q);
        CHECK(std::abs(ft.value - psi_p_phased(st, p)) < 1e-10);
      }
    }
  }
}

TEST_CASE("kernel partial sum: phased and unphased differ by (-i)^n") {
  const OscParams prm{};
  const auto a = kernel_partial_sum(0.4, 0.9, prm, 0, true);
  const auto b = kernel_partial_sum(0.4, 0.9, prm, 0, false);
  CHECK(std::abs(a - b) < 1e-15);
  const auto c = kernel_partial_sum(0.4, 0.9, prm, 1, true) - kernel_partial_sum(0.4, 0.9, prm, 0, true);
  const auto d = kernel_partial_sum(0.4, 0.9, prm, 1, false) - kernel_partial_sum(0.4, 0.9, prm, 0, false);
  CHECK(std::abs(c - std::complex<double>(0, 1) * d) < 1e-15);
}

TEST_CASE("smoothed kernels converge to different limits") {
  const OscParams prm{};
  auto g = [](double p) { return std::exp(-0.5 * (p - 1.0) * (p - 1.0)); };
  for (double x : {-1.5, 0.0, 0.8}) {
    const auto fourier = fourier_kernel_prediction(x, g, 16.0);
    const double delta = delta_kernel_prediction(x, g, prm);
    const auto sp = smoothed_kernel(x, g, prm, 60, true, 16.0);
    const auto su = smoothed_kernel(x, g, prm, 60, false, 16.0);
    CHECK(std::abs(sp - fourier) < 1e-6 * std::abs(fourier));
    CHECK(std::abs(su - delta) < 1e-6 * std::abs(delta));
    CHECK(std::abs(su - fourier) > 0.1 * std::abs(fourier));
  }
}
