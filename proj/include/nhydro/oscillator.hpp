#pragma once

#include <complex>
#include <functional>

#include "nhydro/hypersphere.hpp"
#include "nhydro/quadrature.hpp"

// One-dimensional harmonic oscillator in both representations, with hbar = 1.
//
// psi_x is the usual Hermite-function eigenstate. psi_prime_p is the momentum
// eigenfunction obtained by solving the Schroedinger equation directly in p,
// which fixes it only up to a phase; psi_p_phased is the Fourier transform of
// psi_x, which differs from it by (-i)^n. Only the phased basis reproduces the
// plane-wave kernel <x|p> = e^{ixp} / sqrt(2 pi) through completeness; the
// unphased one collapses to a delta function instead.

namespace nhydro::oscillator {

struct OscParams {
  double mass = 1.0;
  double frequency = 1.0;
};

struct OscState {
  int n = 0;
  OscParams params;
};

void validate(const OscParams& params);

double psi_x(const OscState& state, double x);

double psi_prime_p(const OscState& state, double p);

ComplexAmplitude psi_p_phased(const OscState& state, double p);

/// Truncated completeness sum
///   sum_{n <= n_max} psi_x(n, x) conj(phi_n(p)),  phi_n = phased ? psi_p_phased : psi_prime_p.
/// Diverges pointwise as n_max grows; use smoothed_kernel for assertions.
ComplexAmplitude kernel_partial_sum(double x, double p, const OscParams& params, int n_max,
                                    bool phased);

/// S(g)(x) = int kernel_partial_sum(x, p) g(p) dp, with the p-integral taken over
/// [-half_width, half_width].
ComplexAmplitude smoothed_kernel(double x, const std::function<double(double)>& g,
                                 const OscParams& params, int n_max, bool phased,
                                 double half_width, const quad::QuadratureSpec& quad = {});

/// Plane-wave kernel applied to g: (1 / sqrt(2 pi)) int e^{ixp} g(p) dp.
ComplexAmplitude fourier_kernel_prediction(double x, const std::function<double(double)>& g,
                                           double half_width, const quad::QuadratureSpec& quad = {});

/// delta(X - P) kernel with X = sqrt(m w) x, P = p / sqrt(m w), applied to g:
/// sqrt(m w) g(m w x).
double delta_kernel_prediction(double x, const std::function<double(double)>& g,
                               const OscParams& params);

}  // namespace nhydro::oscillator
