#include "nhydro/hydrogenic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nhydro/specfun.hpp"

namespace nhydro::hydrogenic {

namespace {

using std::numbers::pi;

double bessel_order(int l, int N) { return l + 0.5 * N - 1.0; }

}  // namespace

void validate_state(const HState& state) {
  if (state.N < 3) {
    throw std::invalid_argument("dimension N must be at least 3");
  }
  if (state.n < 1) {
    throw std::invalid_argument("principal number n must be positive");
  }
  if (state.l < 0) {
    throw std::invalid_argument("orbital number l must be non-negative");
  }
  if (state.n < state.l + 1) {
    throw std::invalid_argument("principal number n = " + std::to_string(state.n) +
                                " must exceed l = " + std::to_string(state.l));
  }
  if (state.chain.l != state.l) {
    throw std::invalid_argument("chain degree does not match l");
  }
  hypersphere::validate_chain(state.chain, state.N);
}

HState make_state(int N, int n, int l) {
  HState s{N, n, l, hypersphere::zonal_chain(std::max(l, 0), N)};
  s.chain.l = l;
  validate_state(s);
  return s;
}

ScaleParams scale_params(const HState& state) {
  validate_state(state);
  ScaleParams out;
  out.delta = 1.0 / (state.n + 0.5 * (state.N - 3));
  out.omega = 2.0 * out.delta;
  out.energy = -0.5 * out.delta * out.delta;
  return out;
}

double log_norm_constant(const HState& state) {
  validate_state(state);
  const int n = state.n;
  const int l = state.l;
  const int N = state.N;
  // (n+l+N-3)! written as Gamma(n+l+N-2)
  return 0.5 * (specfun::log_factorial(n - l - 1) - std::log(2.0 * (n + 0.5 * (N - 3))) -
                std::lgamma(n + l + N - 2.0));
}

double norm_constant(const HState& state) { return std::exp(log_norm_constant(state)); }

double radial_position(const HState& state, double r) {
  const ScaleParams sp = scale_params(state);
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw std::domain_error("radial_position: radius must be finite and non-negative");
  }
  const int l = state.l;
  if (r == 0.0 && l > 0) {
    return 0.0;
  }
  const double y = sp.omega * r;
  double log_mag = log_norm_constant(state) + 0.5 * state.N * std::log(sp.omega) - 0.5 * y;
  if (l > 0) {
    log_mag += l * std::log(y);
  }
  const double lag = specfun::laguerre_eval({state.n - l - 1, 2.0 * l + state.N - 2.0}, y);
  return std::exp(log_mag) * lag;
}

long double radial_position_ext(const HState& state, long double r) {
  const ScaleParams sp = scale_params(state);
  if (!(r >= 0) || !std::isfinite(static_cast<double>(r))) {
    throw std::domain_error("radial_position_ext: radius must be finite and non-negative");
  }
  const int l = state.l;
  if (r == 0 && l > 0) {
    return 0;
  }
  const long double y = static_cast<long double>(sp.omega) * r;
  const long double scale =
      std::exp(static_cast<long double>(log_norm_constant(state)) +
               0.5L * state.N * std::log(static_cast<long double>(sp.omega)));
  long double out = scale * std::exp(-y / 2) *
                    specfun::laguerre_eval_ext({state.n - l - 1, 2.0 * l + state.N - 2.0}, y);
  if (l > 0) {
    out *= std::pow(y, static_cast<long double>(l));
  }
  return out;
}

ComplexAmplitude position_wavefunction(const HState& state, const SphericalPoint& point) {
  return radial_position(state, point.radius) * hypersphere::harmonic_eval(state.chain, point, state.N);
}

MomentumArg momentum_arg(double p, double delta) {
  if (!(p >= 0.0) || !(delta > 0.0)) {
    throw std::domain_error("momentum_arg: requires p >= 0 and delta > 0");
  }
  const double p2 = p * p;
  const double d2 = delta * delta;
  return {(p2 - d2) / (p2 + d2)};
}

namespace {

// log of the Gegenbauer-free magnitude of F(p); p > 0 or l == 0.
double log_momentum_envelope(const HState& state, double p, double delta) {
  const int l = state.l;
  const int N = state.N;
  double log_mag = log_norm_constant(state) + (2.0 * l + N) * std::numbers::ln2 +
                   0.5 * N * std::log(delta) + std::lgamma(l + 0.5 * (N - 1)) - 0.5 * std::log(pi) -
                   (l + 0.5 * (N + 1)) * std::log(p * p + delta * delta);
  if (l > 0) {
    log_mag += l * std::log(delta * p);
  }
  return log_mag;
}

}  // namespace

double radial_momentum(const HState& state, double p) {
  const ScaleParams sp = scale_params(state);
  if (!(p >= 0.0) || !std::isfinite(p)) {
    throw std::domain_error("radial_momentum: momentum must be finite and non-negative");
  }
  const int l = state.l;
  if (p == 0.0 && l > 0) {
    return 0.0;
  }
  const double c = specfun::gegenbauer_eval({state.n - l - 1, l + 0.5 * (state.N - 1)},
                                            momentum_arg(p, sp.delta).x);
  return kMomentumSign * std::exp(log_momentum_envelope(state, p, sp.delta)) * c;
}

double radial_momentum_envelope(const HState& state, double p) {
  const ScaleParams sp = scale_params(state);
  if (!(p >= 0.0) || !std::isfinite(p)) {
    throw std::domain_error("radial_momentum_envelope: momentum must be finite and non-negative");
  }
  if (p == 0.0 && state.l > 0) {
    return 0.0;
  }
  return std::exp(log_momentum_envelope(state, p, sp.delta));
}

ComplexAmplitude momentum_phase(const HState& state) {
  validate_state(state);
  static constexpr ComplexAmplitude kMinusIPowers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return static_cast<double>(kMomentumSign) * kMinusIPowers[state.l % 4];
}

ComplexAmplitude momentum_wavefunction(const HState& state, const SphericalPoint& p_point) {
  return momentum_phase(state) * radial_momentum(state, p_point.radius) *
         hypersphere::harmonic_eval(state.chain, p_point, state.N);
}

double gamma_param(double delta, double z) {
  if (z == 1.0) {
    throw std::domain_error("gamma_param: pole at z = 1");
  }
  const double omega = 2.0 * delta;
  return omega * (1.0 + z) / (2.0 * (1.0 - z));
}

double laguerre_shifted_generating(int l, int N, double x, double z, int terms) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("laguerre_shifted_generating: requires |z| < 1");
  }
  const double alpha = 2.0 * l + N - 2.0;
  const double closed =
      std::pow(z, l + 1) * std::pow(1.0 - z, -(alpha + 1.0)) * std::exp(-x * z / (1.0 - z));
  double series = 0.0;
  double zn = std::pow(z, l);
  for (int n = l + 1; n <= terms; ++n) {
    zn *= z;
    series += zn * specfun::laguerre_eval({n - l - 1, alpha}, x);
  }
  return closed - series;
}

namespace {

// 2 delta (2p)^nu Gamma(nu + 3/2) / (sqrt(pi) (p^2 + delta^2)^{nu+3/2})
double generating_prefactor(int l, int N, double delta, double p) {
  const double nu = bessel_order(l, N);
  if (p == 0.0) {
    return nu == 0.0 ? 2.0 * delta * std::tgamma(1.5) / (std::sqrt(pi) * std::pow(delta, 3.0)) : 0.0;
  }
  return std::exp(std::log(2.0 * delta) + nu * std::log(2.0 * p) + std::lgamma(nu + 1.5) -
                  0.5 * std::log(pi) - (nu + 1.5) * std::log(p * p + delta * delta));
}

}  // namespace

std::complex<double> generating_g_closed(int l, int N, double delta, double p,
                                         std::complex<double> z) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("generating_g_closed: requires |z| < 1");
  }
  const double power = l + 0.5 * (N + 1);
  const double theta = std::acos(momentum_arg(p, delta).x);
  const std::complex<double> e{std::cos(theta), std::sin(theta)};
  // 1 - 2zx + z^2 = (1 - z e^{i theta})(1 - z e^{-i theta}), each factor in Re > 0
  const std::complex<double> denom =
      std::pow(1.0 - z * e, -power) * std::pow(1.0 - z * std::conj(e), -power);
  return std::pow(z, l + 1) * (1.0 - z * z) * denom * generating_prefactor(l, N, delta, p);
}

double generating_g_closed(int l, int N, double delta, double p, double z) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("generating_g_closed: requires |z| < 1");
  }
  const double power = l + 0.5 * (N + 1);
  const double x = momentum_arg(p, delta).x;
  return std::pow(z, l + 1) * (1.0 - z * z) * std::pow(1.0 - 2.0 * z * x + z * z, -power) *
         generating_prefactor(l, N, delta, p);
}

TransformResult generating_term(int l, int N, double delta, double p, int n,
                                const QuadratureSpec& quad) {
  if (n < l + 1) {
    return TransformResult{0.0, 0.0, 0, true, false};
  }
  const double nu = bessel_order(l, N);
  const double alpha = 2.0 * l + N - 2.0;
  const double power = l + 0.5 * N;
  const int degree = n - l - 1;
  auto integrand = [=](double r) {
    if (r == 0.0) {
      return 0.0;
    }
    return std::exp(power * std::log(r) - delta * r) *
           specfun::laguerre_eval({degree, alpha}, 2.0 * delta * r) *
           specfun::bessel_j_eval({nu}, p * r);
  };
  return quad::integrate_semi_infinite(integrand, delta, quad, p,
                                       degree + static_cast<int>(std::ceil(power)));
}

TransformResult generating_g_series(int l, int N, double delta, double p, double z, int terms,
                                    const QuadratureSpec& quad) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("generating_g_series: requires |z| < 1");
  }
  TransformResult total{0.0, 0.0, 0, true, false};
  double zn = std::pow(z, l);
  for (int n = l + 1; n <= l + terms; ++n) {
    zn *= z;
    const TransformResult t = generating_term(l, N, delta, p, n, quad);
    total.value += zn * t.value;
    total.error_estimate += std::abs(zn) * t.error_estimate;
    total.nodes_used += t.nodes_used;
    total.converged = total.converged && t.converged;
  }
  return total;
}

double generating_coefficient(int l, int N, double delta, double p, int n, double radius,
                              int samples) {
  if (!(radius > 0.0 && radius < 1.0) || samples < 2 * n + 2) {
    throw std::invalid_argument("generating_coefficient: bad contour");
  }
  std::complex<double> acc{0.0, 0.0};
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * pi * k / samples;
    const std::complex<double> z = std::polar(radius, t);
    acc += generating_g_closed(l, N, delta, p, z) * std::polar(1.0, -n * t);
  }
  return acc.real() / (samples * std::pow(radius, n));
}

double generating_prefactor_ratio(const HState& state, double p) {
  const ScaleParams sp = scale_params(state);
  if (!(p > 0.0)) {
    throw std::domain_error("generating_prefactor_ratio: requires p > 0");
  }
  return std::exp(log_norm_constant(state) + (state.l + 0.5 * state.N) * std::log(sp.omega) +
                  (1.0 - 0.5 * state.N) * std::log(p));
}

}  // namespace nhydro::hydrogenic
