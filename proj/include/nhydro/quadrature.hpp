#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <type_traits>
#include <vector>

namespace nhydro::quad {

enum class Scheme { GaussLegendreComposite, GaussLaguerre };

struct QuadratureSpec {
  /// Initial node budget for the whole domain; each refinement doubles it.
  int node_count = 256;
  /// Domain cut-off in units of the inverse decay rate.
  double truncation_radius = 40.0;
  double target_rel_tol = 1e-10;
  Scheme scheme = Scheme::GaussLegendreComposite;
  int max_refinements = 6;
  /// Use the OpenMP panel kernel. Results are bitwise identical either way.
  bool parallel = true;
};

struct TransformResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int nodes_used = 0;
  bool converged = false;
  /// Set by the radial oracle when p is so small that the kernel is
  /// effectively at its removable singularity.
  bool small_argument = false;
};

struct ComplexTransformResult {
  std::complex<double> value{};
  double error_estimate = 0.0;
  int nodes_used = 0;
  bool converged = false;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule; safe to call concurrently.
const GaussRule& gauss_legendre(int order);

/// Gauss-Laguerre rule for the weight e^{-x} on [0, inf).
const GaussRule& gauss_laguerre(int order);

/// Points per panel of the composite rule.
inline constexpr int kPanelOrder = 16;

template <class T>
struct PanelSums {
  T value{};
  double magnitude = 0.0;  // sum of w |f|, the rounding scale of the result
};

namespace detail {

// Sums are accumulated in long double: oscillatory integrands can cancel to
// within a few ulps of their partial sums.
template <class T>
struct Wide {
  using type = long double;
};
template <class T>
struct Wide<std::complex<T>> {
  using type = std::complex<long double>;
};
template <class T>
using wide_t = typename Wide<T>::type;

// Abscissa type handed to the integrand. Integrands taking long double see
// nodes placed in long double; a double node carries a rounding jitter of
// eps * x, which an integrand oscillating like e^{ipx} turns into an error
// of order p x eps per node.
template <class F>
struct NodeArg {
  using type = double;
};
template <class R>
struct NodeArg<std::function<R(long double)>> {
  using type = long double;
};
template <class F>
using node_arg_t = typename NodeArg<F>::type;

template <class F, class T>
void panel_sum(const F& f, long double a, long double h, const GaussRule& rule,
               wide_t<T>& value, long double& mag) {
  const long double half = h / 2;
  const long double mid = a + half;
  wide_t<T> acc{};
  long double acc_mag = 0.0L;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const T fx = f(static_cast<node_arg_t<F>>(mid + half * rule.nodes[i]));
    const long double w = rule.weights[i];
    acc += w * static_cast<wide_t<T>>(fx);
    acc_mag += w * std::abs(fx);
  }
  value = half * acc;
  mag = half * acc_mag;
}

template <class T>
PanelSums<T> reduce_in_order(const std::vector<wide_t<T>>& values,
                             const std::vector<long double>& mags) {
  wide_t<T> value{};
  long double mag = 0.0L;
  for (std::size_t i = 0; i < values.size(); ++i) {
    value += values[i];
    mag += mags[i];
  }
  return PanelSums<T>{static_cast<T>(value), static_cast<double>(mag)};
}

}  // namespace detail

/// Serial reference: composite rule over `panels` equal panels of [a, b].
template <class F, class T = std::invoke_result_t<const F&, detail::node_arg_t<F>>>
PanelSums<T> composite_serial(const F& f, double a, double b, int panels, const GaussRule& rule) {
  const long double h = (static_cast<long double>(b) - a) / panels;
  std::vector<detail::wide_t<T>> values(static_cast<std::size_t>(panels));
  std::vector<long double> mags(static_cast<std::size_t>(panels));
  for (int k = 0; k < panels; ++k) {
    detail::panel_sum<F, T>(f, a + k * h, h, rule, values[static_cast<std::size_t>(k)],
                      mags[static_cast<std::size_t>(k)]);
  }
  return detail::reduce_in_order<T>(values, mags);
}

/// OpenMP variant of composite_serial. Panels are evaluated concurrently and
/// reduced in panel order, so the result matches the serial kernel bit for bit.
template <class F, class T = std::invoke_result_t<const F&, detail::node_arg_t<F>>>
PanelSums<T> composite_parallel(const F& f, double a, double b, int panels, const GaussRule& rule) {
  const long double h = (static_cast<long double>(b) - a) / panels;
  std::vector<detail::wide_t<T>> values(static_cast<std::size_t>(panels));
  std::vector<long double> mags(static_cast<std::size_t>(panels));
#pragma omp parallel for schedule(static) if (panels >= 32)
  for (int k = 0; k < panels; ++k) {
    detail::panel_sum<F, T>(f, a + k * h, h, rule, values[static_cast<std::size_t>(k)],
                      mags[static_cast<std::size_t>(k)]);
  }
  return detail::reduce_in_order<T>(values, mags);
}

/// Composite Gauss-Legendre on [a, b] with doubling refinement. Panels are no
/// longer than a quarter wavelength of `wavenumber` when it is positive.
TransformResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureSpec& spec, double wavenumber = 0.0);

ComplexTransformResult integrate_interval_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureSpec& spec, double wavenumber = 0.0);

/// Integral over [0, inf) of an integrand decaying at least like
/// poly(r) e^{-decay_rate r}, with `poly_degree` the degree of the polynomial
/// envelope. The domain is cut at 1.5 (truncation_radius + 2 poly_degree) / decay_rate.
TransformResult integrate_semi_infinite(const std::function<double(double)>& f, double decay_rate,
                                        const QuadratureSpec& spec, double wavenumber = 0.0,
                                        int poly_degree = 0);

/// integrate_semi_infinite for an integrand evaluated in long double at nodes
/// placed in long double. For oracles whose integrand cancels to many digits.
TransformResult integrate_semi_infinite_ext(const std::function<long double(long double)>& f,
                                            double decay_rate, const QuadratureSpec& spec,
                                            double wavenumber = 0.0, int poly_degree = 0);

/// Integral over [0, inf) of an integrand with algebraic decay, through the map
/// p = scale tan(t/2), t in [0, pi).
TransformResult integrate_algebraic_half_line(const std::function<double(double)>& f, double scale,
                                              const QuadratureSpec& spec);

}  // namespace nhydro::quad
