#pragma once

#include <complex>
#include <functional>

#include "nhydro/hydrogenic.hpp"
#include "nhydro/quadrature.hpp"
#include "nhydro/specfun.hpp"

namespace nhydro::transforms {

using quad::ComplexTransformResult;
using quad::QuadratureSpec;
using quad::TransformResult;
using specfun::BesselOrder;

/// int_0^inf e^{-gamma r} J_nu(p r) r^{nu+1} dr
///   = 2 gamma (2p)^nu Gamma(nu + 3/2) / (sqrt(pi) (gamma^2 + p^2)^{nu + 3/2}).
double hankel_closed_form(BesselOrder nu, double gamma, double p);

/// The same integral by composite quadrature.
TransformResult hankel_numeric(BesselOrder nu, double gamma, double p, const QuadratureSpec& quad);

/// Radial Fourier integral of the position-space state,
///   int_0^inf R_{nl}(r) J_nu(p r) / (p r)^{N/2-1} r^{N-1} dr,   nu = l + N/2 - 1.
/// This is the quadrature ground truth for hydrogenic::radial_momentum; it
/// only touches the position-space radial function.
TransformResult radial_fourier_oracle(const hydrogenic::HState& state, double p,
                                      const QuadratureSpec& quad);

/// (1 / sqrt(2 pi)) int_{-L}^{L} e^{-i p x} f(x) dx.
ComplexTransformResult fourier_1d_oracle(const std::function<double(double)>& f, double p,
                                         double half_width, const QuadratureSpec& quad);

}  // namespace nhydro::transforms
