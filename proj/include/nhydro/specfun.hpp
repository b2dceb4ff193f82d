#pragma once

// Classical special functions: Gamma, generalized Laguerre, Gegenbauer,
// physicists' Hermite and real-order Bessel J.
//
// Polynomials are evaluated by their three-term recurrences. Generating
// functions and closed-form identities live in the test oracles and the
// verification suites, never on the evaluation path.

#include "nhydro/quadrature.hpp"

namespace nhydro::specfun {

struct LaguerreSpec {
  int degree = 0;
  double alpha = 0.0;
};

struct GegenbauerSpec {
  int degree = 0;
  double alpha = 0.5;
};

struct BesselOrder {
  double nu = 0.0;
};

/// Gamma function for 0 < z <= 171. Larger arguments overflow; use log_gamma.
double gamma_fn(double z);

/// log Gamma(z) for z > 0.
double log_gamma(double z);

/// log(n!) for n >= 0.
double log_factorial(int n);

double laguerre_eval(LaguerreSpec spec, double x);

/// Extended-precision evaluation for quadrature oracles whose integrands
/// cancel heavily.
long double laguerre_eval_ext(LaguerreSpec spec, long double x);

/// Numerical value of int_0^inf e^{-x} x^a L_n^{(a)}(x)^2 dx. Its closed form is
/// Gamma(a + n + 1) / n!.
quad::TransformResult laguerre_weighted_norm(LaguerreSpec spec, const quad::QuadratureSpec& quad);

double gegenbauer_eval(GegenbauerSpec spec, double x);

/// Left minus right side of the contiguous relation
///   (n + a) C_{n+1}^{(a-1)}(x) = (a - 1) [C_{n+1}^{(a)}(x) - C_{n-1}^{(a)}(x)].
double gegenbauer_contiguous_residual(int n, double alpha, double x);

/// Magnitude of the largest term in the contiguous relation, used to turn the
/// residual into a relative error.
double gegenbauer_contiguous_scale(int n, double alpha, double x);

/// Closed form minus truncated series (n = 1..terms) of
///   (-z)^{l+1} (1 - z^2) / (1 - 2zx + z^2)^{l+(N+1)/2}
///     = (-1)^{l+1} sum_n z^n [C_{n-l-1}^{(l+(N+1)/2)}(x) - C_{n-l-3}^{(l+(N+1)/2)}(x)].
/// Negative Gegenbauer degrees contribute zero.
double gegenbauer_generating_expansion(int l, int N, double x, double z, int terms);

double hermite_eval(int n, double x);

/// J_nu(x) for nu > -1, x >= 0. Dispatches between the ascending series, Miller
/// backward recurrence and the Hankel asymptotic expansion.
double bessel_j_eval(BesselOrder order, double x);

long double bessel_j_eval_ext(BesselOrder order, long double x);

/// Ascending power series with log-scaled terms. Accurate while the largest
/// term stays close to |J|, i.e. for moderate x.
double bessel_j_series(BesselOrder order, double x);

/// Miller backward recurrence normalised by the Neumann-type sum
///   (x/2)^{v0} = sum_k (v0 + 2k) Gamma(v0 + k) / k! J_{v0+2k}(x).
double bessel_j_miller(BesselOrder order, double x);

/// Hankel asymptotic expansion; valid for x well above nu^2.
double bessel_j_asymptotic(BesselOrder order, double x);

/// Fused kernel J_nu(x) / x^s for s <= nu, finite at x = 0.
double bessel_j_scaled(BesselOrder order, double s, double x);
long double bessel_j_scaled_ext(BesselOrder order, double s, long double x);

}  // namespace nhydro::specfun
