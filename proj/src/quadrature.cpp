#include "nhydro/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace nhydro::quad {

namespace {

GaussRule build_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.nodes[static_cast<std::size_t>(i)] = -z;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

GaussRule build_gauss_laguerre(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      z = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      z += 15.0 / (1.0 + 2.5 * n);
    } else {
      const double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.nodes[static_cast<std::size_t>(i - 2)]);
    }
    double p1 = 0.0;
    double p2 = 0.0;
    double pp = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
      p1 = 1.0;
      p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0 - z) * p2 - (j - 1.0) * p3) / j;
      }
      pp = (n * p1 - n * p2) / z;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::abs(z)) {
        break;
      }
    }
    rule.nodes[static_cast<std::size_t>(i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = -1.0 / (pp * n * p2);
  }
  return rule;
}

template <GaussRule (*Build)(int)>
const GaussRule& cached(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  if (order < 1) {
    throw std::invalid_argument("quadrature order must be positive");
  }
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) {
    slot = std::make_unique<GaussRule>(Build(order));
  }
  return *slot;
}

template <class T>
struct Refined {
  T value{};
  double error = 0.0;
  int nodes = 0;
  bool converged = false;
};

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Rounding unit of the integrand's value type.
template <class T>
constexpr double value_eps() {
  if constexpr (std::is_same_v<T, long double>) {
    return static_cast<double>(std::numeric_limits<long double>::epsilon());
  } else {
    return kEps;
  }
}

// Levels of geometric refinement toward the left endpoint of a graded panel.
constexpr int kGradingLevels = 24;

// First panel [a, a + h] split geometrically toward a, so integrands behaving
// like (x - a)^beta with non-integer beta are still integrated to full accuracy.
template <class F, class T = std::invoke_result_t<const F&, detail::node_arg_t<F>>>
PanelSums<T> graded_panel(const F& f, double a, double h, const GaussRule& rule) {
  detail::wide_t<T> value{};
  long double mag = 0.0L;
  double right = h;
  for (int k = 0; k <= kGradingLevels; ++k) {
    const double left = (k == kGradingLevels) ? 0.0 : 0.5 * right;
    detail::wide_t<T> v{};
    long double m = 0.0L;
    detail::panel_sum<F, T>(f, static_cast<long double>(a) + left, right - left, rule, v, m);
    value += v;
    mag += m;
    right = left;
  }
  return PanelSums<T>{static_cast<T>(value), static_cast<double>(mag)};
}

template <class T, class F>
Refined<T> refine_composite(const F& f, double a, double b, const QuadratureSpec& spec,
                            double wavenumber, bool graded_left = false) {
  if (!(b > a)) {
    throw std::invalid_argument("integration interval is empty");
  }
  const GaussRule& rule = gauss_legendre(kPanelOrder);
  int panels = std::max(1, (spec.node_count + kPanelOrder - 1) / kPanelOrder);
  if (wavenumber > 0.0) {
    const double max_panel = std::numbers::pi / (2.0 * wavenumber);
    panels = std::max(panels, static_cast<int>(std::ceil((b - a) / max_panel)));
  }
  auto uniform = [&](double lo, int count) {
    return spec.parallel ? composite_parallel(f, lo, b, count, rule)
                         : composite_serial(f, lo, b, count, rule);
  };
  auto run = [&](int count) {
    if (!graded_left) {
      return uniform(a, count);
    }
    const double h = (b - a) / count;
    PanelSums<T> out = graded_panel(f, a, h, rule);
    if (count > 1) {
      const PanelSums<T> rest = uniform(a + h, count - 1);
      out.value += rest.value;
      out.magnitude += rest.magnitude;
    }
    return out;
  };

  const int graded_extra = graded_left ? kGradingLevels * kPanelOrder : 0;

  Refined<T> out;
  PanelSums<T> prev = run(panels);
  out.nodes = panels * kPanelOrder + graded_extra;
  out.value = prev.value;
  out.error = std::numeric_limits<double>::infinity();
  for (int level = 0; level < spec.max_refinements; ++level) {
    panels *= 2;
    const PanelSums<T> cur = run(panels);
    out.nodes += panels * kPanelOrder + graded_extra;
    const double diff = static_cast<double>(std::abs(cur.value - prev.value));
    const double eps = value_eps<T>();
    const double floor = 8.0 * eps * cur.magnitude;
    out.value = cur.value;
    out.error = std::max(diff, floor);
    if (diff <= spec.target_rel_tol * static_cast<double>(std::abs(cur.value)) ||
        diff <= 64.0 * eps * cur.magnitude) {
      out.converged = true;
      return out;
    }
    prev = cur;
  }
  return out;
}

template <class T>
TransformResult to_result(const Refined<T>& r) {
  TransformResult out;
  out.value = static_cast<double>(r.value);
  out.error_estimate = r.error;
  out.nodes_used = r.nodes;
  out.converged = r.converged;
  return out;
}

TransformResult laguerre_semi_infinite(const std::function<double(double)>& f, double decay_rate,
                                       const QuadratureSpec& spec) {
  auto apply = [&](int n) {
    const GaussRule& rule = gauss_laguerre(n);
    double sum = 0.0;
    double mag = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = rule.nodes[i];
      if (rule.weights[i] == 0.0) {
        continue;
      }
      const double fx = std::exp(x) * f(x / decay_rate);
      sum += rule.weights[i] * fx;
      mag += rule.weights[i] * std::abs(fx);
    }
    return PanelSums<double>{sum / decay_rate, mag / decay_rate};
  };
  int n = std::clamp(spec.node_count / 8, 8, 64);
  TransformResult out;
  PanelSums<double> prev = apply(n);
  out.nodes_used = n;
  out.value = prev.value;
  out.error_estimate = std::numeric_limits<double>::infinity();
  for (int level = 0; level < spec.max_refinements && 2 * n <= 256; ++level) {
    n *= 2;
    const PanelSums<double> cur = apply(n);
    out.nodes_used += n;
    const double diff = std::abs(cur.value - prev.value);
    out.value = cur.value;
    out.error_estimate = std::max(diff, 8.0 * kEps * cur.magnitude);
    if (diff <= spec.target_rel_tol * std::abs(cur.value) || diff <= 64.0 * kEps * cur.magnitude) {
      out.converged = true;
      return out;
    }
    prev = cur;
  }
  return out;
}

}  // namespace

const GaussRule& gauss_legendre(int order) { return cached<build_gauss_legendre>(order); }

const GaussRule& gauss_laguerre(int order) { return cached<build_gauss_laguerre>(order); }

TransformResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureSpec& spec, double wavenumber) {
  return to_result(refine_composite<double>(f, a, b, spec, wavenumber));
}

ComplexTransformResult integrate_interval_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureSpec& spec, double wavenumber) {
  const auto r = refine_composite<std::complex<double>>(f, a, b, spec, wavenumber);
  ComplexTransformResult out;
  out.value = r.value;
  out.error_estimate = r.error;
  out.nodes_used = r.nodes;
  out.converged = r.converged;
  return out;
}

TransformResult integrate_semi_infinite(const std::function<double(double)>& f, double decay_rate,
                                        const QuadratureSpec& spec, double wavenumber,
                                        int poly_degree) {
  if (!(decay_rate > 0.0)) {
    throw std::invalid_argument("integrate_semi_infinite: decay rate must be positive");
  }
  if (spec.scheme == Scheme::GaussLaguerre && wavenumber == 0.0) {
    return laguerre_semi_infinite(f, decay_rate, spec);
  }
  const double length = 1.5 * (spec.truncation_radius + 2.0 * std::max(poly_degree, 0)) / decay_rate;
  return to_result(refine_composite<double>(f, 0.0, length, spec, wavenumber, true));
}

TransformResult integrate_semi_infinite_ext(const std::function<long double(long double)>& f,
                                            double decay_rate, const QuadratureSpec& spec,
                                            double wavenumber, int poly_degree) {
  if (!(decay_rate > 0.0)) {
    throw std::invalid_argument("integrate_semi_infinite_ext: decay rate must be positive");
  }
  const double length = 1.5 * (spec.truncation_radius + 2.0 * std::max(poly_degree, 0)) / decay_rate;
  return to_result(refine_composite<long double>(f, 0.0, length, spec, wavenumber, true));
}

TransformResult integrate_algebraic_half_line(const std::function<double(double)>& f, double scale,
                                              const QuadratureSpec& spec) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("integrate_algebraic_half_line: scale must be positive");
  }
  auto mapped = [&](double t) {
    const double c = std::cos(0.5 * t);
    return f(scale * std::tan(0.5 * t)) * 0.5 * scale / (c * c);
  };
  return integrate_interval(mapped, 0.0, std::numbers::pi, spec);
}

}  // namespace nhydro::quad
