#pragma once

#include <complex>
#include <vector>

#include "nhydro/quadrature.hpp"

namespace nhydro {

using ComplexAmplitude = std::complex<double>;

namespace hypersphere {

struct CartesianPoint {
  std::vector<double> coords;  // x_1 .. x_N

  int dimension() const { return static_cast<int>(coords.size()); }
};

/// Point in N-space: radius, polar angles theta_1..theta_{N-2} in [0, pi] and
/// azimuth phi in [0, 2 pi). theta_1 is measured from the x_N axis.
struct SphericalPoint {
  double radius = 0.0;
  std::vector<double> polar;
  double azimuth = 0.0;

  int dimension() const { return static_cast<int>(polar.size()) + 2; }
};

/// Quantum numbers (l, mu_2, ..., mu_{N-1}) of a hyperspherical harmonic.
/// l >= mu_2 >= ... >= |mu_{N-1}|; the last entry is the signed azimuthal m.
struct AngularChain {
  int l = 0;
  std::vector<int> mu;

  int dimension() const { return static_cast<int>(mu.size()) + 2; }
  int m() const { return mu.empty() ? 0 : mu.back(); }
  /// mu_j for j = 1..N-1 with mu_1 = l and the last entry taken as |m|.
  int level(int j) const;

  friend bool operator==(const AngularChain&, const AngularChain&) = default;
};

/// Throws std::invalid_argument ("chain ordering violated: ...") on a bad chain.
void validate_chain(const AngularChain& chain, int N);

/// Chain with every mu equal to zero.
AngularChain zonal_chain(int l, int N);

/// All chains of degree l for dimension N in lexicographic order of (mu_2, ..., mu_{N-1}).
std::vector<AngularChain> enumerate_chains(int l, int N);

CartesianPoint to_cartesian(const SphericalPoint& p);
CartesianPoint to_cartesian(const SphericalPoint& p, int N);

/// Inverse chart. The origin maps to radius 0 with all angles zero.
SphericalPoint to_spherical(const CartesianPoint& p);

/// Normalisation constant A of the Gegenbauer-product harmonic, as a logarithm.
double log_harmonic_norm_constant(const AngularChain& chain, int N);
double harmonic_norm_constant(const AngularChain& chain, int N);

/// Hyperspherical harmonic. No Condon-Shortley factor: the only phase is e^{i m phi}.
ComplexAmplitude harmonic_eval(const AngularChain& chain, const SphericalPoint& p, int N);

/// Surface area of the unit sphere in R^N.
double unit_sphere_area(int N);

/// Tensor-product angular quadrature of Y_a conj(Y_b). Gauss-Legendre in each
/// theta_j; the azimuthal factor is integrated exactly.
ComplexAmplitude angular_norm(const AngularChain& a, const AngularChain& b, int N,
                              const quad::QuadratureSpec& spec = {});

/// Truncated plane-wave expansion
///   e^{i p.r} ~ (2 pi)^{N/2} sum_{l <= l_max} i^l sum_chains Y(r^) conj(Y(p^)) J_{l+N/2-1}(pr)/(pr)^{N/2-1}.
ComplexAmplitude plane_wave_partial_sum(const CartesianPoint& p_vec, const CartesianPoint& r_vec,
                                        int l_max);

}  // namespace hypersphere
}  // namespace nhydro
