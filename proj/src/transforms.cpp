#include "nhydro/transforms.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nhydro::transforms {

namespace {
using std::numbers::pi;
}

double hankel_closed_form(BesselOrder nu, double gamma, double p) {
  if (!(nu.nu > -1.0) || !(gamma > 0.0) || !(p >= 0.0)) {
    throw std::domain_error("hankel_closed_form: requires nu > -1, gamma > 0, p >= 0");
  }
  const double v = nu.nu;
  if (p == 0.0) {
    if (v != 0.0) {
      return v > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return 1.0 / (gamma * gamma);
  }
  return std::exp(std::log(2.0 * gamma) + v * std::log(2.0 * p) + std::lgamma(v + 1.5) -
                  0.5 * std::log(pi) - (v + 1.5) * std::log(gamma * gamma + p * p));
}

TransformResult hankel_numeric(BesselOrder nu, double gamma, double p, const QuadratureSpec& quad) {
  if (!(nu.nu > -1.0) || !(gamma > 0.0) || !(p >= 0.0)) {
    throw std::domain_error("hankel_numeric: requires nu > -1, gamma > 0, p >= 0");
  }
  const double v = nu.nu;
  auto integrand = [=](double r) {
    return std::exp(-gamma * r + (v + 1.0) * std::log(r)) * specfun::bessel_j_eval(nu, p * r);
  };
  return quad::integrate_semi_infinite(integrand, gamma, quad, p,
                                       static_cast<int>(std::ceil(v + 1.0)));
}

TransformResult radial_fourier_oracle(const hydrogenic::HState& state, double p,
                                      const QuadratureSpec& quad) {
  const hydrogenic::ScaleParams sp = hydrogenic::scale_params(state);
  if (!(p >= 0.0) || !std::isfinite(p)) {
    throw std::domain_error("radial_fourier_oracle: momentum must be finite and non-negative");
  }
  if (p == 0.0 && state.l > 0) {
    return TransformResult{0.0, 0.0, 0, true, false};
  }
  const int N = state.N;
  const double s = 0.5 * N - 1.0;
  const BesselOrder nu{state.l + s};
  // At large p the integrand cancels to about one part in 1e7 of its
  // magnitude, so it is evaluated, and its nodes placed, in long double.
  const std::function<long double(long double)> integrand = [&, p](long double r) {
    if (r == 0) {
      return 0.0L;
    }
    return hydrogenic::radial_position_ext(state, r) * specfun::bessel_j_scaled_ext(nu, s, p * r) *
           std::pow(r, static_cast<long double>(N - 1));
  };
  TransformResult out = quad::integrate_semi_infinite_ext(integrand, sp.delta, quad, p, state.n + N);
  out.small_argument = p > 0.0 && p < 1e-4 * sp.delta;
  return out;
}

ComplexTransformResult fourier_1d_oracle(const std::function<double(double)>& f, double p,
                                         double half_width, const QuadratureSpec& quad) {
  if (!(half_width > 0.0)) {
    throw std::invalid_argument("fourier_1d_oracle: half width must be positive");
  }
  const double scale = 1.0 / std::sqrt(2.0 * pi);
  auto integrand = [&](double x) {
    return scale * f(x) * std::complex<double>{std::cos(p * x), -std::sin(p * x)};
  };
  return quad::integrate_interval_complex(integrand, -half_width, half_width, quad, std::abs(p));
}

}  // namespace nhydro::transforms
