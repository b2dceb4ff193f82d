#include "nhydro/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace nhydro::specfun {

namespace {

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(who) + ": non-finite argument");
  }
}

// Below this the ascending series loses less than ~1e-12 to cancellation.
constexpr double kSeriesLimit = 8.0;
// Fused kernel switches to the factored series below this argument.
constexpr double kKernelSeriesLimit = 1e-3;

}  // namespace

double gamma_fn(double z) {
  if (!(z > 0.0)) {
    throw std::domain_error("gamma_fn: argument must be positive");
  }
  if (z > 171.0) {
    throw std::overflow_error("gamma_fn: overflow, use log_gamma");
  }
  return std::tgamma(z);
}

double log_gamma(double z) {
  if (!(z > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive");
  }
  return std::lgamma(z);
}

double log_factorial(int n) {
  if (n < 0) {
    throw std::domain_error("log_factorial: negative argument");
  }
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double laguerre_eval(LaguerreSpec spec, double x) {
  require_finite(x, "laguerre_eval");
  if (spec.degree < 0) {
    throw std::domain_error("laguerre_eval: negative degree");
  }
  const double a = spec.alpha;
  double prev = 1.0;
  if (spec.degree == 0) {
    return prev;
  }
  double cur = 1.0 + a - x;
  for (int k = 1; k < spec.degree; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

long double laguerre_eval_ext(LaguerreSpec spec, long double x) {
  require_finite(static_cast<double>(x), "laguerre_eval_ext");
  if (spec.degree < 0) {
    throw std::domain_error("laguerre_eval_ext: negative degree");
  }
  const long double a = spec.alpha;
  long double prev = 1;
  if (spec.degree == 0) {
    return prev;
  }
  long double cur = 1 + a - x;
  for (int k = 1; k < spec.degree; ++k) {
    const long double next = ((2 * k + 1 + a - x) * cur - (k + a) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

quad::TransformResult laguerre_weighted_norm(LaguerreSpec spec, const quad::QuadratureSpec& quad) {
  if (!(spec.alpha > -1.0) || spec.degree < 0) {
    throw std::domain_error("laguerre_weighted_norm: requires alpha > -1 and degree >= 0");
  }
  auto integrand = [spec](double x) {
    if (x == 0.0) {
      return spec.alpha == 0.0 ? 1.0 : 0.0;
    }
    const double lag = laguerre_eval(spec, x);
    return std::exp(spec.alpha * std::log(x) - x) * lag * lag;
  };
  return quad::integrate_semi_infinite(integrand, 1.0, quad, 0.0,
                                       2 * spec.degree + static_cast<int>(std::ceil(spec.alpha)));
}

double gegenbauer_eval(GegenbauerSpec spec, double x) {
  require_finite(x, "gegenbauer_eval");
  if (spec.degree < 0) {
    throw std::domain_error("gegenbauer_eval: negative degree");
  }
  const double a = spec.alpha;
  if (!(a > -0.5) || a == 0.0) {
    throw std::domain_error("gegenbauer_eval: parameter must satisfy a > -1/2, a != 0");
  }
  double prev = 1.0;
  if (spec.degree == 0) {
    return prev;
  }
  double cur = 2.0 * a * x;
  for (int k = 1; k < spec.degree; ++k) {
    const double next = (2.0 * (k + a) * x * cur - (k + 2.0 * a - 1.0) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer_contiguous_residual(int n, double alpha, double x) {
  if (n < 1 || !(alpha > 1.5)) {
    throw std::domain_error("gegenbauer_contiguous_residual: requires n >= 1 and alpha > 3/2");
  }
  const double lhs = (n + alpha) * gegenbauer_eval({n + 1, alpha - 1.0}, x);
  const double rhs = (alpha - 1.0) *
                     (gegenbauer_eval({n + 1, alpha}, x) - gegenbauer_eval({n - 1, alpha}, x));
  return lhs - rhs;
}

double gegenbauer_contiguous_scale(int n, double alpha, double x) {
  const double lhs = std::abs((n + alpha) * gegenbauer_eval({n + 1, alpha - 1.0}, x));
  const double r1 = std::abs((alpha - 1.0) * gegenbauer_eval({n + 1, alpha}, x));
  const double r2 = std::abs((alpha - 1.0) * gegenbauer_eval({n - 1, alpha}, x));
  return std::max({lhs, r1, r2});
}

double gegenbauer_generating_expansion(int l, int N, double x, double z, int terms) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("gegenbauer_generating_expansion: series diverges for |z| >= 1");
  }
  if (l < 0 || N < 3 || terms < l + 1) {
    throw std::domain_error("gegenbauer_generating_expansion: requires l >= 0, N >= 3, terms >= l+1");
  }
  const double lambda = l + 0.5 * (N + 1);
  const double closed =
      std::pow(-z, l + 1) * (1.0 - z * z) / std::pow(1.0 - 2.0 * z * x + z * z, lambda);

  // Run the recurrence once and index into it.
  std::vector<double> c(static_cast<std::size_t>(terms), 0.0);
  if (terms > 0) {
    c[0] = 1.0;
  }
  if (terms > 1) {
    c[1] = 2.0 * lambda * x;
  }
  for (int k = 1; k + 1 < terms; ++k) {
    c[k + 1] = (2.0 * (k + lambda) * x * c[k] - (k + 2.0 * lambda - 1.0) * c[k - 1]) / (k + 1.0);
  }
  auto coef = [&](int k) { return k < 0 ? 0.0 : c[static_cast<std::size_t>(k)]; };

  const double sign = (l % 2 == 0) ? -1.0 : 1.0;  // (-1)^{l+1}
  double series = 0.0;
  double zn = 1.0;
  for (int n = 1; n <= terms; ++n) {
    zn *= z;
    series += zn * (coef(n - l - 1) - coef(n - l - 3));
  }
  return closed - sign * series;
}

double hermite_eval(int n, double x) {
  require_finite(x, "hermite_eval");
  if (n < 0) {
    throw std::domain_error("hermite_eval: negative degree");
  }
  double prev = 1.0;
  if (n == 0) {
    return prev;
  }
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

template <class T>
void check_bessel_args(BesselOrder order, T x, const char* who) {
  require_finite(static_cast<double>(x), who);
  if (!(order.nu > -1.0)) {
    throw std::domain_error(std::string(who) + ": order must exceed -1");
  }
  if (x < 0) {
    throw std::domain_error(std::string(who) + ": argument must be non-negative");
  }
}

// sum_k (-q)^k / (k! (nu+1)_k) with q = x^2/4.
template <class T>
T bessel_series_sum(T nu, T x) {
  const T q = x * x / 4;
  const T tiny = std::numeric_limits<T>::epsilon() / 16;
  T term = 1;
  T sum = 1;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (k * (k + nu));
    sum += term;
    if (k > q && std::abs(term) < tiny * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

template <class T>
T bessel_at_zero(T nu) {
  if (nu == 0) {
    return 1;
  }
  return nu > 0 ? T(0) : std::numeric_limits<T>::infinity();
}

template <class T>
T series_impl(T nu, T x) {
  if (x == 0) {
    return bessel_at_zero(nu);
  }
  const T log_prefactor = nu * std::log(x / 2) - std::lgamma(nu + 1);
  return std::exp(log_prefactor) * bessel_series_sum(nu, x);
}

template <class T>
T miller_impl(T nu, T x) {
  if (x == 0) {
    return bessel_at_zero(nu);
  }
  const int k0 = static_cast<int>(std::floor(nu));  // -1 when nu < 0
  const T nu0 = nu - k0;                             // in [0, 1)
  const T top = std::max(x, static_cast<T>(k0));
  int start = static_cast<int>(std::ceil(top)) + 20 + static_cast<int>(std::ceil(12 * std::cbrt(x)));
  if constexpr (sizeof(T) > sizeof(double)) {
    start += static_cast<int>(std::ceil(4 * std::cbrt(x))) + 6;
  }
  start += start % 2;

  // Weights of the normalisation sum, w_k = (nu0 + 2k) Gamma(nu0 + k) / k!.
  const int half = start / 2;
  std::vector<T> w(static_cast<std::size_t>(half) + 1);
  w[0] = std::tgamma(nu0 + 1);
  T h = w[0];
  for (int k = 1; k <= half; ++k) {
    w[static_cast<std::size_t>(k)] = (nu0 + 2 * k) * h;
    h *= (nu0 + k) / (k + T(1));
  }

  T f_next = 0;       // order nu0 + m + 1
  T f_cur = T(1e-30);  // order nu0 + m
  T norm = w[static_cast<std::size_t>(half)] * f_cur;
  T target = (k0 == start) ? f_cur : T(0);
  for (int m = start; m >= 1; --m) {
    const T f_prev = 2 * (nu0 + m) / x * f_cur - f_next;
    f_next = f_cur;
    f_cur = f_prev;
    const int idx = m - 1;
    if (idx % 2 == 0) {
      norm += w[static_cast<std::size_t>(idx / 2)] * f_cur;
    }
    if (idx == k0) {
      target = f_cur;
    }
    if (std::abs(f_cur) > T(1e200)) {
      f_cur *= T(1e-200);
      f_next *= T(1e-200);
      norm *= T(1e-200);
      target *= T(1e-200);
    }
  }
  if (k0 < 0) {
    target = 2 * nu0 / x * f_cur - f_next;
  }
  return target * std::pow(x / 2, nu0) / norm;
}

template <class T>
T asymptotic_impl(T nu, T x) {
  const T mu = 4 * nu * nu;
  const T tiny = std::numeric_limits<T>::epsilon() / 16;
  T p = 1;
  T q = 0;
  T term = 1;
  T last = std::numeric_limits<T>::infinity();
  for (int k = 1; k < 200; ++k) {
    const T odd = 2 * k - 1;
    term *= (mu - odd * odd) / (8 * k * x);
    const T mag = std::abs(term);
    if (mag == 0) {
      break;  // half-integer orders terminate
    }
    if (k > nu && mag > last) {
      break;  // asymptotic series started to diverge
    }
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (mag < tiny) {
      break;
    }
    last = mag;
  }
  const T pi_t = std::numbers::pi_v<T>;
  const T phase = (nu / 2 + T(0.25)) * pi_t;
  const T cx = std::cos(x);
  const T sx = std::sin(x);
  const T cp = std::cos(phase);
  const T sp = std::sin(phase);
  const T cos_chi = cx * cp + sx * sp;
  const T sin_chi = sx * cp - cx * sp;
  return std::sqrt(2 / (pi_t * x)) * (p * cos_chi - q * sin_chi);
}

template <class T>
T eval_impl(T nu, T x) {
  if (x <= T(kSeriesLimit)) {
    return series_impl(nu, x);
  }
  // The long double path keeps Miller longer: the asymptotic series stalls at
  // about 1e-17 relative for x near the switch.
  const T switch_at = sizeof(T) > sizeof(double) ? 60 + 2 * nu * nu : 25 + nu * nu;
  if (x >= switch_at) {
    return asymptotic_impl(nu, x);
  }
  return miller_impl(nu, x);
}

template <class T>
T scaled_impl(T nu, T s, T x) {
  if (x < T(kKernelSeriesLimit)) {
    const T lead = nu - s;
    const T ln2 = std::numbers::ln2_v<T>;
    if (x == 0) {
      return lead == 0 ? std::exp(-nu * ln2 - std::lgamma(nu + 1)) : T(0);
    }
    const T log_prefactor = lead * std::log(x) - nu * ln2 - std::lgamma(nu + 1);
    return std::exp(log_prefactor) * bessel_series_sum(nu, x);
  }
  return eval_impl(nu, x) / std::pow(x, s);
}

}  // namespace

double bessel_j_series(BesselOrder order, double x) {
  check_bessel_args(order, x, "bessel_j_series");
  return series_impl(order.nu, x);
}

double bessel_j_miller(BesselOrder order, double x) {
  check_bessel_args(order, x, "bessel_j_miller");
  return miller_impl(order.nu, x);
}

double bessel_j_asymptotic(BesselOrder order, double x) {
  check_bessel_args(order, x, "bessel_j_asymptotic");
  if (x == 0.0) {
    throw std::domain_error("bessel_j_asymptotic: argument must be positive");
  }
  return asymptotic_impl(order.nu, x);
}

double bessel_j_eval(BesselOrder order, double x) {
  check_bessel_args(order, x, "bessel_j_eval");
  return eval_impl(order.nu, x);
}

long double bessel_j_eval_ext(BesselOrder order, long double x) {
  check_bessel_args(order, x, "bessel_j_eval_ext");
  return eval_impl(static_cast<long double>(order.nu), x);
}

double bessel_j_scaled(BesselOrder order, double s, double x) {
  check_bessel_args(order, x, "bessel_j_scaled");
  if (s > order.nu) {
    throw std::domain_error("bessel_j_scaled: scaling power exceeds order");
  }
  return scaled_impl(order.nu, s, x);
}

long double bessel_j_scaled_ext(BesselOrder order, double s, long double x) {
  check_bessel_args(order, x, "bessel_j_scaled_ext");
  if (s > order.nu) {
    throw std::domain_error("bessel_j_scaled_ext: scaling power exceeds order");
  }
  return scaled_impl(static_cast<long double>(order.nu), static_cast<long double>(s), x);
}

}  // namespace nhydro::specfun
