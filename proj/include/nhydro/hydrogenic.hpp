#pragma once

#include <complex>

#include "nhydro/hypersphere.hpp"
#include "nhydro/quadrature.hpp"

namespace nhydro::hydrogenic {

using hypersphere::AngularChain;
using hypersphere::SphericalPoint;
using quad::QuadratureSpec;
using quad::TransformResult;

/// Bound state (n, l, {mu}) of the N-dimensional Coulomb problem in atomic units.
struct HState {
  int N = 3;
  int n = 1;
  int l = 0;
  AngularChain chain;
};

/// Throws std::invalid_argument naming the violated constraint.
void validate_state(const HState& state);

/// State with the all-zero angular chain.
HState make_state(int N, int n, int l);

/// Sturmian scale: delta = 1 / (n + (N-3)/2), omega = 2 delta. The energy
/// -delta^2 / 2 follows from the Coulomb problem; it is derived, not tabulated.
struct ScaleParams {
  double delta = 0.0;
  double omega = 0.0;
  double energy = 0.0;
};

ScaleParams scale_params(const HState& state);

double log_norm_constant(const HState& state);
double norm_constant(const HState& state);

/// R_{nl}(r) = N_{nl} omega^{N/2} (omega r)^l e^{-omega r / 2} L_{n-l-1}^{(2l+N-2)}(omega r).
double radial_position(const HState& state, double r);

/// radial_position with the r-dependent factors carried in long double.
long double radial_position_ext(const HState& state, long double r);

ComplexAmplitude position_wavefunction(const HState& state, const SphericalPoint& point);

struct MomentumArg {
  double x = -1.0;
};

/// x = (p^2 - delta^2) / (p^2 + delta^2), in [-1, 1).
MomentumArg momentum_arg(double p, double delta);

/// Real radial profile F(p) of the momentum wavefunction,
///   F(p) = N_{nl} 2^{2l+N} delta^{N/2} Gamma(l + (N-1)/2) / sqrt(pi)
///          * (delta p)^l / (p^2 + delta^2)^{l+(N+1)/2} * C_{n-l-1}^{(l+(N-1)/2)}(x),
/// normalised so that the integral of F^2 p^{N-1} over [0, inf) is one.
double radial_momentum(const HState& state, double p);

/// |F(p)| with the Gegenbauer factor dropped; the scale against which errors
/// near zeros of F are measured.
double radial_momentum_envelope(const HState& state, double p);

/// Sign relating F(p) to the radial Fourier integral of R_{nl}. Measured by the
/// `fourier` verification suite to be +1 for every state in its grid.
inline constexpr int kMomentumSign = +1;

/// Unit-modulus factor (-i)^l * kMomentumSign multiplying F(p) Y(p^).
ComplexAmplitude momentum_phase(const HState& state);

ComplexAmplitude momentum_wavefunction(const HState& state, const SphericalPoint& p_point);

/// gamma = omega (1 + z) / (2 (1 - z)) with omega = 2 delta.
double gamma_param(double delta, double z);

/// Closed form minus truncated series (n <= terms) of
///   z^{l+1} (1-z)^{-(2l+N-1)} exp(-x z / (1-z)) = sum_n z^n L_{n-l-1}^{(2l+N-2)}(x).
double laguerre_shifted_generating(int l, int N, double x, double z, int terms);

/// Generating function G(p, z, delta) in closed form,
///   z^{l+1} (1 - z^2) 2 delta (2p)^{nu} Gamma(nu + 3/2)
///     / (sqrt(pi) (p^2 + delta^2)^{nu+3/2} (1 - 2zx + z^2)^{nu+3/2}),  nu = l + N/2 - 1.
double generating_g_closed(int l, int N, double delta, double p, double z);
std::complex<double> generating_g_closed(int l, int N, double delta, double p,
                                         std::complex<double> z);

/// n-th term of the series form of G: the radial integral
///   I_n = int r^{l+N/2} e^{-delta r} L_{n-l-1}^{(2l+N-2)}(2 delta r) J_nu(p r) dr.
TransformResult generating_term(int l, int N, double delta, double p, int n,
                                const QuadratureSpec& quad);

/// sum over n = l+1 .. l+terms of z^n I_n.
TransformResult generating_g_series(int l, int N, double delta, double p, double z, int terms,
                                    const QuadratureSpec& quad);

/// Taylor coefficient of z^n in generating_g_closed, extracted numerically by
/// the trapezoid rule on the circle |z| = radius.
double generating_coefficient(int l, int N, double delta, double p, int n, double radius = 0.5,
                              int samples = 128);

/// Ratio F(p) / [z^n] G(p, z, delta_n) = N_{nl} omega^{l+N/2} p^{1-N/2}.
double generating_prefactor_ratio(const HState& state, double p);

}  // namespace nhydro::hydrogenic
