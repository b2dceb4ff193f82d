#include "nhydro/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace nhydro::oscillator {

namespace {

using std::numbers::pi;

// Normalised Hermite functions h_k(xi) = (2^k k! sqrt(pi))^{-1/2} e^{-xi^2/2} H_k(xi)
// for k = 0..n_max, by their stable three-term recurrence.
std::vector<double> hermite_functions(int n_max, double xi) {
  std::vector<double> h(static_cast<std::size_t>(n_max) + 1, 0.0);
  h[0] = std::pow(pi, -0.25) * std::exp(-0.5 * xi * xi);
  if (n_max >= 1) {
    h[1] = std::sqrt(2.0) * xi * h[0];
  }
  for (int k = 1; k < n_max; ++k) {
    h[static_cast<std::size_t>(k + 1)] =
        std::sqrt(2.0 / (k + 1)) * xi * h[static_cast<std::size_t>(k)] -
        std::sqrt(static_cast<double>(k) / (k + 1)) * h[static_cast<std::size_t>(k - 1)];
  }
  return h;
}

ComplexAmplitude minus_i_power(int n) {
  static constexpr ComplexAmplitude kPowers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return kPowers[n % 4];
}

void require_level(int n) {
  if (n < 0) {
    throw std::invalid_argument("oscillator level must be non-negative");
  }
}

}  // namespace

void validate(const OscParams& params) {
  if (!(params.mass > 0.0) || !(params.frequency > 0.0)) {
    throw std::invalid_argument("oscillator mass and frequency must be positive");
  }
}

double psi_x(const OscState& state, double x) {
  validate(state.params);
  require_level(state.n);
  const double mw = state.params.mass * state.params.frequency;
  return std::pow(mw, 0.25) * hermite_functions(state.n, std::sqrt(mw) * x).back();
}

double psi_prime_p(const OscState& state, double p) {
  validate(state.params);
  require_level(state.n);
  const double mw = state.params.mass * state.params.frequency;
  return std::pow(mw, -0.25) * hermite_functions(state.n, p / std::sqrt(mw)).back();
}

ComplexAmplitude psi_p_phased(const OscState& state, double p) {
  return minus_i_power(state.n) * psi_prime_p(state, p);
}

ComplexAmplitude kernel_partial_sum(double x, double p, const OscParams& params, int n_max,
                                    bool phased) {
  validate(params);
  require_level(n_max);
  const double mw = params.mass * params.frequency;
  const std::vector<double> hx = hermite_functions(n_max, std::sqrt(mw) * x);
  const std::vector<double> hp = hermite_functions(n_max, p / std::sqrt(mw));
  ComplexAmplitude total{0.0, 0.0};
  for (int n = 0; n <= n_max; ++n) {
    const double term = hx[static_cast<std::size_t>(n)] * hp[static_cast<std::size_t>(n)];
    total += phased ? std::conj(minus_i_power(n)) * term : ComplexAmplitude{term, 0.0};
  }
  return total;
}

ComplexAmplitude smoothed_kernel(double x, const std::function<double(double)>& g,
                                 const OscParams& params, int n_max, bool phased,
                                 double half_width, const quad::QuadratureSpec& quad) {
  validate(params);
  require_level(n_max);
  ComplexAmplitude total{0.0, 0.0};
  for (int n = 0; n <= n_max; ++n) {
    const OscState st{n, params};
    auto integrand = [&](double p) { return psi_prime_p(st, p) * g(p); };
    const double overlap = quad::integrate_interval(integrand, -half_width, half_width, quad).value;
    const ComplexAmplitude coef = phased ? std::conj(minus_i_power(n)) : ComplexAmplitude{1.0, 0.0};
    total += psi_x(st, x) * coef * overlap;
  }
  return total;
}

ComplexAmplitude fourier_kernel_prediction(double x, const std::function<double(double)>& g,
                                           double half_width, const quad::QuadratureSpec& quad) {
  const double scale = 1.0 / std::sqrt(2.0 * pi);
  auto integrand = [&](double p) {
    return scale * g(p) * ComplexAmplitude{std::cos(x * p), std::sin(x * p)};
  };
  return quad::integrate_interval_complex(integrand, -half_width, half_width, quad, std::abs(x))
      .value;
}

double delta_kernel_prediction(double x, const std::function<double(double)>& g,
                               const OscParams& params) {
  validate(params);
  const double mw = params.mass * params.frequency;
  return std::sqrt(mw) * g(mw * x);
}

}  // namespace nhydro::oscillator
