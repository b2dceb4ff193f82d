#include "nhydro/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "nhydro/hydrogenic.hpp"
#include "nhydro/hypersphere.hpp"
#include "nhydro/oscillator.hpp"
#include "nhydro/specfun.hpp"
#include "nhydro/transforms.hpp"

namespace nhydro::verify {

namespace {

using std::numbers::pi;
using Params = std::map<std::string, double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string tag(const char* fmt, auto... args) {
  char buf[128];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// |a - b| / |b|, or |a - b| when b vanishes.
double rel_error(double a, double b) {
  const double d = std::abs(a - b);
  return b == 0.0 ? d : d / std::abs(b);
}

// Runs task(i, checks) for i in [0, count) across threads. Each task fills its
// own slot; slots are concatenated in index order so the result does not
// depend on scheduling. An exception becomes a failing check.
template <class Task>
void run_tasks(std::vector<Check>& out, int count, const std::string& identity, const Task& task) {
  std::vector<std::vector<Check>> parts(static_cast<std::size_t>(count));
  std::vector<std::string> failures(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      task(i, parts[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      failures[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (int i = 0; i < count; ++i) {
    auto& part = parts[static_cast<std::size_t>(i)];
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    if (!failures[static_cast<std::size_t>(i)].empty()) {
      record(out, tag("task-%d", i), identity, {}, kInf, 0.0, failures[static_cast<std::size_t>(i)]);
    }
  }
}

struct StateKey {
  int N;
  int n;
  int l;
};

std::vector<StateKey> sweep_states(const VerifyOptions& opt) {
  std::vector<int> dims = {3, 4, 5, 7};
  if (opt.only_N != 0) {
    dims = {opt.only_N};
  }
  std::vector<StateKey> out;
  for (int N : dims) {
    for (int n = 1; n <= opt.n_max; ++n) {
      for (int l = 0; l < n; ++l) {
        out.push_back({N, n, l});
      }
    }
  }
  return out;
}

std::string state_id(const StateKey& s) { return tag("N%d-n%d-l%d", s.N, s.n, s.l); }

Params state_params(const StateKey& s) {
  return {{"N", s.N}, {"n", s.n}, {"l", s.l}};
}

// count points log-spaced over [lo, hi].
std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    out.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / (count - 1)));
  }
  return out;
}

// ---------------------------------------------------------------------------

SuiteResult run_angular(const VerifyOptions& opt) {
  SuiteResult out{"angular", {"harmonic-orthonormality"}, {}};
  for (int N : {3, 4}) {
    std::vector<hypersphere::AngularChain> chains;
    for (int l = 0; l <= 3; ++l) {
      for (auto& c : hypersphere::enumerate_chains(l, N)) {
        chains.push_back(std::move(c));
      }
    }
    const int count = static_cast<int>(chains.size());
    run_tasks(out.checks, count, "harmonic-orthonormality", [&](int i, std::vector<Check>& part) {
      const auto& a = chains[static_cast<std::size_t>(i)];
      for (int j = i; j < count; ++j) {
        const auto& b = chains[static_cast<std::size_t>(j)];
        const std::complex<double> v = hypersphere::angular_norm(a, b, N, opt.quad);
        const double expected = i == j ? 1.0 : 0.0;
        record(part, tag("N%d-a%d-b%d", N, i, j), "harmonic-orthonormality",
               {{"N", N}, {"la", a.l}, {"lb", b.l}, {"ma", a.m()}, {"mb", b.m()}},
               std::abs(v - expected), 1e-10);
      }
    });
  }
  return out;
}

SuiteResult run_coefficient_extraction(const VerifyOptions&) {
  SuiteResult out{"coefficient-extraction", {"generating-coefficient"}, {}};
  std::vector<StateKey> states;
  for (int N : {3, 4, 5}) {
    for (int n = 1; n <= 4; ++n) {
      for (int l = 0; l < n; ++l) {
        states.push_back({N, n, l});
      }
    }
  }
  run_tasks(out.checks, static_cast<int>(states.size()), "generating-coefficient",
            [&](int i, std::vector<Check>& part) {
              const StateKey& k = states[static_cast<std::size_t>(i)];
              const auto st = hydrogenic::make_state(k.N, k.n, k.l);
              const double delta = hydrogenic::scale_params(st).delta;
              const double ps[] = {0.3 * delta, delta, 3.0 * delta};
              for (int j = 0; j < 3; ++j) {
                const double p = ps[j];
                const double coef = hydrogenic::generating_coefficient(k.l, k.N, delta, p, k.n);
                const double via_g = coef * hydrogenic::generating_prefactor_ratio(st, p);
                const double direct = hydrogenic::radial_momentum(st, p);
                // Scaled by the envelope: p = delta is a node of every odd-degree state.
                const double err =
                    std::abs(via_g - direct) / hydrogenic::radial_momentum_envelope(st, p);
                Params prm = state_params(k);
                prm["p"] = p;
                record(part, state_id(k) + tag("-p%d", j), "generating-coefficient", prm, err, 1e-9);
              }
            });
  return out;
}

SuiteResult run_fourier(const VerifyOptions& opt) {
  SuiteResult out{"fourier", {"radial-fourier-transform", "momentum-sign"}, {}};
  const std::vector<StateKey> states = sweep_states(opt);
  run_tasks(out.checks, static_cast<int>(states.size()), "radial-fourier-transform",
            [&](int i, std::vector<Check>& part) {
              const StateKey& k = states[static_cast<std::size_t>(i)];
              const auto st = hydrogenic::make_state(k.N, k.n, k.l);
              const double delta = hydrogenic::scale_params(st).delta;
              const std::vector<double> momenta = log_grid(0.1 * delta, 10.0 * delta, 12);
              int mismatched = 0;
              for (std::size_t j = 0; j < momenta.size(); ++j) {
                const double p = momenta[j];
                const auto oracle = transforms::radial_fourier_oracle(st, p, opt.quad);
                const double f = hydrogenic::radial_momentum(st, p);
                Params prm = state_params(k);
                prm["p"] = p;
                if (!oracle.converged) {
                  record(part, state_id(k) + tag("-p%02zu", j), "radial-fourier-transform", prm,
                         kInf, 1e-8, "quadrature did not converge");
                  ++mismatched;
                  continue;
                }
                record(part, state_id(k) + tag("-p%02zu", j), "radial-fourier-transform", prm,
                       rel_error(std::abs(oracle.value), std::abs(f)), 1e-8);
                const int sign = (oracle.value >= 0.0) == (f >= 0.0) ? 1 : -1;
                if (sign != hydrogenic::kMomentumSign) {
                  ++mismatched;
                }
              }
              Params prm = state_params(k);
              prm["sign"] = hydrogenic::kMomentumSign;
              record(part, state_id(k) + "-sign", "momentum-sign", prm, mismatched, 0.0);
            });
  return out;
}

SuiteResult run_gegenbauer(const VerifyOptions&) {
  SuiteResult out{"gegenbauer", {"gegenbauer-contiguous"}, {}};
  const double alphas[] = {2.0, 2.5, 3.5};
  for (int ia = 0; ia < 3; ++ia) {
    for (int n = 1; n <= 10; ++n) {
      for (int ix = 0; ix <= 20; ++ix) {
        const double x = -1.0 + 0.1 * ix;
        const double a = alphas[ia];
        // Odd-degree terms all vanish at x = 0, leaving 0 / 0.
        const double residual = std::abs(specfun::gegenbauer_contiguous_residual(n, a, x));
        const double scale = specfun::gegenbauer_contiguous_scale(n, a, x);
        const double err = scale > 0.0 ? residual / scale : residual;
        record(out.checks, tag("a%d-n%02d-x%02d", ia, n, ix), "gegenbauer-contiguous",
               {{"alpha", a}, {"n", n}, {"x", x}}, err, 1e-12);
      }
    }
  }
  return out;
}

SuiteResult run_gegenbauer_generating(const VerifyOptions&) {
  SuiteResult out{"gegenbauer-generating", {"gegenbauer-generating-series"}, {}};
  const double xs[] = {-0.6, 0.3, 0.9};
  const double zs[] = {0.1, 0.2, -0.3};
  for (int l = 0; l <= 2; ++l) {
    for (int N : {3, 4, 5}) {
      for (int ix = 0; ix < 3; ++ix) {
        for (int iz = 0; iz < 3; ++iz) {
          const double err =
              std::abs(specfun::gegenbauer_generating_expansion(l, N, xs[ix], zs[iz], 60));
          record(out.checks, tag("l%d-N%d-x%d-z%d", l, N, ix, iz), "gegenbauer-generating-series",
                 {{"l", l}, {"N", N}, {"x", xs[ix]}, {"z", zs[iz]}, {"terms", 60}}, err, 1e-10);
        }
      }
    }
  }
  return out;
}

SuiteResult run_generating_function(const VerifyOptions& opt) {
  SuiteResult out{"generating-function", {"generating-series", "generating-hankel"}, {}};
  struct Point {
    int l, N;
    double delta, p, z;
  };
  // Terms decay like n^{l+N/2} |z|^n; 120 terms put the tail below 1e-20 at |z| = 0.5.
  constexpr int kTerms = 120;
  std::vector<Point> grid;
  const std::pair<int, int> ln[] = {{0, 3}, {1, 4}, {2, 5}};
  for (const auto& [l, N] : ln) {
    for (double delta : {0.5, 1.0}) {
      for (double p : {0.4, 1.3}) {
        for (double z : {-0.3, 0.5}) {
          grid.push_back({l, N, delta, p, z});
        }
      }
    }
  }
  run_tasks(out.checks, static_cast<int>(grid.size()), "generating-series",
            [&](int i, std::vector<Check>& part) {
              const Point& g = grid[static_cast<std::size_t>(i)];
              const double closed = hydrogenic::generating_g_closed(g.l, g.N, g.delta, g.p, g.z);
              const Params prm{{"l", g.l}, {"N", g.N}, {"delta", g.delta}, {"p", g.p}, {"z", g.z}};
              const auto series =
                  hydrogenic::generating_g_series(g.l, g.N, g.delta, g.p, g.z, kTerms, opt.quad);
              record(part, tag("g%02d-series", i), "generating-series", prm,
                     series.converged ? rel_error(series.value, closed) : kInf, 1e-9,
                     series.converged ? "" : "quadrature did not converge");
              // Summing the Laguerre generating function under the integral gives
              // one Laplace-Hankel integral at gamma(z).
              const double alpha = 2.0 * g.l + g.N - 2.0;
              const double via_hankel =
                  std::pow(g.z, g.l + 1) * std::pow(1.0 - g.z, -(alpha + 1.0)) *
                  transforms::hankel_closed_form({g.l + 0.5 * g.N - 1.0},
                                                 hydrogenic::gamma_param(g.delta, g.z), g.p);
              record(part, tag("g%02d-hankel", i), "generating-hankel", prm,
                     rel_error(via_hankel, closed), 1e-9);
            });
  return out;
}

SuiteResult run_hankel(const VerifyOptions& opt) {
  SuiteResult out{"hankel", {"laplace-hankel"}, {}};
  const double nus[] = {0.0, 0.5, 1.5, 2.5, 3.5};
  const double gammas[] = {0.5, 1.0, 2.0};
  const double ps[] = {0.0, 0.5, 1.0, 2.0, 4.0};
  run_tasks(out.checks, 75, "laplace-hankel", [&](int i, std::vector<Check>& part) {
    const int in = i / 15;
    const int ig = (i / 5) % 3;
    const int ip = i % 5;
    const double nu = nus[in];
    const double g = gammas[ig];
    const double p = ps[ip];
    const auto num = transforms::hankel_numeric({nu}, g, p, opt.quad);
    const double closed = transforms::hankel_closed_form({nu}, g, p);
    record(part, tag("nu%d-g%d-p%d", in, ig, ip), "laplace-hankel",
           {{"nu", nu}, {"gamma", g}, {"p", p}},
           num.converged ? rel_error(num.value, closed) : kInf, 1e-9,
           num.converged ? "" : "quadrature did not converge");
  });
  return out;
}

// Taylor coefficients of (1 - z)^{-a-1} exp(-x z / (1 - z)) up to z^n_max, in
// long double power-series arithmetic.
std::vector<long double> laguerre_generating_coefficients(double alpha, double x, int n_max) {
  const std::size_t len = static_cast<std::size_t>(n_max) + 1;
  // u = -x z / (1 - z): u_k = -x for k >= 1
  std::vector<long double> e(len, 0.0L);
  e[0] = 1.0L;
  for (std::size_t n = 1; n < len; ++n) {
    long double acc = 0.0L;
    for (std::size_t k = 1; k <= n; ++k) {
      acc += static_cast<long double>(k) * -static_cast<long double>(x) * e[n - k];
    }
    e[n] = acc / static_cast<long double>(n);
  }
  std::vector<long double> binom(len, 0.0L);
  binom[0] = 1.0L;
  for (std::size_t k = 1; k < len; ++k) {
    binom[k] = binom[k - 1] * (static_cast<long double>(alpha) + k) / static_cast<long double>(k);
  }
  std::vector<long double> out(len, 0.0L);
  for (std::size_t n = 0; n < len; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      out[n] += binom[k] * e[n - k];
    }
  }
  return out;
}

SuiteResult run_laguerre(const VerifyOptions& opt) {
  SuiteResult out{"laguerre", {"laguerre-weighted-norm", "laguerre-generating-coefficients",
                               "laguerre-derivative"}, {}};
  const double norm_alphas[] = {0.0, 0.5, 1.0, 2.5, 4.0};
  for (int ia = 0; ia < 5; ++ia) {
    for (int n = 0; n <= 8; ++n) {
      const double a = norm_alphas[ia];
      const auto r = specfun::laguerre_weighted_norm({n, a}, opt.quad);
      const double expected = std::exp(std::lgamma(a + n + 1.0) - specfun::log_factorial(n));
      record(out.checks, tag("norm-a%d-n%d", ia, n), "laguerre-weighted-norm",
             {{"alpha", a}, {"n", n}}, r.converged ? rel_error(r.value, expected) : kInf, 1e-10,
             r.converged ? "" : "quadrature did not converge");
    }
  }

  const double gen_alphas[] = {0.0, 1.0, 2.0, 2.5, 3.0, 4.0};
  const double xs[] = {0.0, 0.5, 2.0, 5.0, 10.0, 20.0};
  for (int ia = 0; ia < 6; ++ia) {
    for (int ix = 0; ix < 6; ++ix) {
      const auto coef = laguerre_generating_coefficients(gen_alphas[ia], xs[ix], 12);
      for (int n = 0; n <= 12; ++n) {
        const double lag = specfun::laguerre_eval({n, gen_alphas[ia]}, xs[ix]);
        const double ref = static_cast<double>(coef[static_cast<std::size_t>(n)]);
        record(out.checks, tag("gen-a%d-x%d-n%02d", ia, ix, n), "laguerre-generating-coefficients",
               {{"alpha", gen_alphas[ia]}, {"x", xs[ix]}, {"n", n}},
               std::abs(lag - ref) / std::max(1.0, std::abs(ref)), 1e-10);
      }
    }
  }

  // d^k/dx^k L_n^a = (-1)^k L_{n-k}^{a+k}, by 5-point central differences.
  const double h = 1e-2;
  const double der_alphas[] = {0.0, 1.5, 3.0};
  const double der_xs[] = {0.3, 1.7, 4.0, 9.0};
  for (int ia = 0; ia < 3; ++ia) {
    for (int n = 2; n <= 8; ++n) {
      for (int ix = 0; ix < 4; ++ix) {
        const double a = der_alphas[ia];
        const double x = der_xs[ix];
        auto L = [&](double t) { return specfun::laguerre_eval({n, a}, t); };
        const double d1 = (L(x - 2 * h) - 8 * L(x - h) + 8 * L(x + h) - L(x + 2 * h)) / (12 * h);
        const double d2 =
            (-L(x - 2 * h) + 16 * L(x - h) - 30 * L(x) + 16 * L(x + h) - L(x + 2 * h)) / (12 * h * h);
        const double r1 = -specfun::laguerre_eval({n - 1, a + 1}, x);
        const double r2 = specfun::laguerre_eval({n - 2, a + 2}, x);
        record(out.checks, tag("der-a%d-n%d-x%d-k1", ia, n, ix), "laguerre-derivative",
               {{"alpha", a}, {"n", n}, {"x", x}, {"k", 1}},
               std::abs(d1 - r1) / std::max(1.0, std::abs(r1)), 1e-6);
        record(out.checks, tag("der-a%d-n%d-x%d-k2", ia, n, ix), "laguerre-derivative",
               {{"alpha", a}, {"n", n}, {"x", x}, {"k", 2}},
               std::abs(d2 - r2) / std::max(1.0, std::abs(r2)), 1e-6);
      }
    }
  }
  return out;
}

SuiteResult run_laguerre_generating(const VerifyOptions&) {
  SuiteResult out{"laguerre-generating", {"laguerre-shifted-generating"}, {}};
  const double xs[] = {0.5, 1.0, 3.0};
  const double zs[] = {0.2, 0.3, -0.3};
  for (int l = 0; l <= 2; ++l) {
    for (int N : {3, 6}) {
      for (int ix = 0; ix < 3; ++ix) {
        for (int iz = 0; iz < 3; ++iz) {
          const double err =
              std::abs(hydrogenic::laguerre_shifted_generating(l, N, xs[ix], zs[iz], 60));
          record(out.checks, tag("l%d-N%d-x%d-z%d", l, N, ix, iz), "laguerre-shifted-generating",
                 {{"l", l}, {"N", N}, {"x", xs[ix]}, {"z", zs[iz]}, {"terms", 60}}, err, 1e-10);
        }
      }
    }
  }
  return out;
}

SuiteResult run_n3_reduction(const VerifyOptions& opt) {
  SuiteResult out{"n3-reduction", {"ground-state-momentum", "radial-fourier-transform"}, {}};
  const auto ground = hydrogenic::make_state(3, 1, 0);
  const std::vector<double> momenta = log_grid(0.1, 10.0, 12);
  hypersphere::SphericalPoint dir{1.0, {pi / 3}, pi / 4};
  for (std::size_t j = 0; j < momenta.size(); ++j) {
    const double p = momenta[j];
    const double textbook = 2.0 * std::numbers::sqrt2 / pi / std::pow(1.0 + p * p, 2);
    dir.radius = p;
    const double closed = std::abs(hydrogenic::momentum_wavefunction(ground, dir));
    record(out.checks, tag("n1-l0-p%02zu-closed", j), "ground-state-momentum", {{"p", p}},
           rel_error(closed, textbook), 1e-9);
    const auto oracle = transforms::radial_fourier_oracle(ground, p, opt.quad);
    const double y00 = 1.0 / std::sqrt(4.0 * pi);
    record(out.checks, tag("n1-l0-p%02zu-oracle", j), "ground-state-momentum", {{"p", p}},
           oracle.converged ? rel_error(std::abs(oracle.value) * y00, textbook) : kInf, 1e-9,
           oracle.converged ? "" : "quadrature did not converge");
  }
  const std::pair<int, int> excited[] = {{2, 0}, {2, 1}, {3, 2}};
  for (const auto& [n, l] : excited) {
    const auto st = hydrogenic::make_state(3, n, l);
    const double delta = hydrogenic::scale_params(st).delta;
    const std::vector<double> ps = log_grid(0.1 * delta, 10.0 * delta, 12);
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const auto oracle = transforms::radial_fourier_oracle(st, ps[j], opt.quad);
      const double f = hydrogenic::radial_momentum(st, ps[j]);
      record(out.checks, tag("n%d-l%d-p%02zu", n, l, j), "radial-fourier-transform",
             {{"n", n}, {"l", l}, {"p", ps[j]}},
             oracle.converged ? rel_error(oracle.value, f) : kInf, 1e-8,
             oracle.converged ? "" : "quadrature did not converge");
    }
  }
  return out;
}

SuiteResult run_normalization(const VerifyOptions& opt) {
  SuiteResult out{"normalization", {"position-norm", "momentum-norm", "momentum-orthogonality"}, {}};
  const std::vector<StateKey> states = sweep_states(opt);
  run_tasks(out.checks, static_cast<int>(states.size()), "position-norm",
            [&](int i, std::vector<Check>& part) {
              const StateKey& k = states[static_cast<std::size_t>(i)];
              const auto st = hydrogenic::make_state(k.N, k.n, k.l);
              const double delta = hydrogenic::scale_params(st).delta;
              auto pos = [&](double r) {
                const double R = hydrogenic::radial_position(st, r);
                return R * R * std::pow(r, k.N - 1);
              };
              const auto rn = quad::integrate_semi_infinite(pos, 2.0 * delta, opt.quad, 0.0,
                                                            2 * (k.n - 1) + k.N);
              record(part, state_id(k) + "-position", "position-norm", state_params(k),
                     rn.converged ? std::abs(rn.value - 1.0) : kInf, 1e-10);
              auto mom = [&](double p) {
                const double F = hydrogenic::radial_momentum(st, p);
                return F * F * std::pow(p, k.N - 1);
              };
              const auto mn = quad::integrate_algebraic_half_line(mom, delta, opt.quad);
              record(part, state_id(k) + "-momentum", "momentum-norm", state_params(k),
                     mn.converged ? std::abs(mn.value - 1.0) : kInf, 1e-10);
              // Radial orthogonality against every lower n with the same (N, l).
              for (int n2 = k.l + 1; n2 < k.n; ++n2) {
                const auto other = hydrogenic::make_state(k.N, n2, k.l);
                const double d2 = hydrogenic::scale_params(other).delta;
                auto cross = [&](double p) {
                  return hydrogenic::radial_momentum(st, p) *
                         hydrogenic::radial_momentum(other, p) * std::pow(p, k.N - 1);
                };
                const auto on = quad::integrate_algebraic_half_line(cross, std::sqrt(delta * d2),
                                                                    opt.quad);
                Params prm = state_params(k);
                prm["n2"] = n2;
                record(part, state_id(k) + tag("-orth-n%d", n2), "momentum-orthogonality", prm,
                       on.converged ? std::abs(on.value) : kInf, 1e-8);
              }
            });
  return out;
}

// e^{-(p - 1)^2 / 2}. A centred Gaussian is its own Fourier transform, which
// would make the phased and unphased kernels agree.
double shifted_gaussian(double p) { return std::exp(-0.5 * (p - 1.0) * (p - 1.0)); }

SuiteResult run_oscillator_kernel(const VerifyOptions& opt) {
  SuiteResult out{"oscillator-kernel", {"kernel-phased", "kernel-unphased", "kernel-separation"}, {}};
  const oscillator::OscParams params{};
  const int M = 60;
  const double half_width = 16.0;
  std::vector<double> xs;
  for (int i = 0; i <= 20; ++i) {
    xs.push_back(-3.0 + 0.3 * i);
  }
  const int count = static_cast<int>(xs.size());
  std::vector<double> phased_err(static_cast<std::size_t>(count), kInf);
  std::vector<double> deviation(static_cast<std::size_t>(count), 0.0);
  run_tasks(out.checks, count, "kernel-phased", [&](int i, std::vector<Check>& part) {
    const double x = xs[static_cast<std::size_t>(i)];
    const std::complex<double> fourier =
        oscillator::fourier_kernel_prediction(x, shifted_gaussian, half_width, opt.quad);
    const double delta = oscillator::delta_kernel_prediction(x, shifted_gaussian, params);
    const std::complex<double> sp =
        oscillator::smoothed_kernel(x, shifted_gaussian, params, M, true, half_width, opt.quad);
    const std::complex<double> su =
        oscillator::smoothed_kernel(x, shifted_gaussian, params, M, false, half_width, opt.quad);
    const double ep = std::abs(sp - fourier) / std::abs(fourier);
    phased_err[static_cast<std::size_t>(i)] = ep;
    deviation[static_cast<std::size_t>(i)] = std::abs(su - fourier) / std::abs(fourier);
    record(part, tag("x%02d-phased", i), "kernel-phased", {{"x", x}, {"M", M}}, ep, 1e-4);
    record(part, tag("x%02d-unphased", i), "kernel-unphased", {{"x", x}, {"M", M}},
           std::abs(su - delta) / std::abs(delta), 1e-4);
  });
  const double worst_phased = *std::max_element(phased_err.begin(), phased_err.end());
  const double least_deviation = *std::min_element(deviation.begin(), deviation.end());
  // The phased kernel must track the Fourier prediction at least ten times
  // better than the unphased one, which must miss it by more than 10%.
  record(out.checks, "separation-ratio", "kernel-separation", {{"M", M}},
         worst_phased / least_deviation, 0.1);
  record(out.checks, "unphased-deviation", "kernel-separation", {{"M", M}},
         0.1 / least_deviation, 1.0);
  return out;
}

SuiteResult run_oscillator_phase(const VerifyOptions& opt) {
  SuiteResult out{"oscillator-phase", {"oscillator-fourier-phase", "oscillator-norm",
                                       "oscillator-orthogonality"}, {}};
  const oscillator::OscParams param_sets[] = {{1.0, 1.0}, {1.5, 2.0}};
  for (int ip = 0; ip < 2; ++ip) {
    const auto& params = param_sets[ip];
    const double mw = params.mass * params.frequency;
    const double half_width = 14.0 / std::sqrt(mw);
    run_tasks(out.checks, 11, "oscillator-fourier-phase", [&](int n, std::vector<Check>& part) {
      const oscillator::OscState st{n, params};
      auto f = [&](double x) { return oscillator::psi_x(st, x); };
      for (int j = 0; j < 20; ++j) {
        const double p = (-4.75 + 0.5 * j) * std::sqrt(mw);
        const auto ft = transforms::fourier_1d_oracle(f, p, half_width, opt.quad);
        const std::complex<double> expected = oscillator::psi_p_phased(st, p);
        record(part, tag("m%d-n%02d-p%02d", ip, n, j), "oscillator-fourier-phase",
               {{"mass", params.mass}, {"frequency", params.frequency}, {"n", n}, {"p", p}},
               ft.converged ? std::abs(ft.value - expected) : kInf, 1e-9,
               ft.converged ? "" : "quadrature did not converge");
      }
      auto px2 = [&](double x) { return std::pow(oscillator::psi_x(st, x), 2); };
      auto pp2 = [&](double p) { return std::pow(oscillator::psi_prime_p(st, p), 2); };
      const auto nx = quad::integrate_interval(px2, -half_width, half_width, opt.quad);
      const auto np = quad::integrate_interval(pp2, -half_width * mw, half_width * mw, opt.quad);
      const Params prm{{"mass", params.mass}, {"frequency", params.frequency}, {"n", n}};
      record(part, tag("m%d-n%02d-norm-x", ip, n), "oscillator-norm", prm,
             std::abs(nx.value - 1.0), 1e-10);
      record(part, tag("m%d-n%02d-norm-p", ip, n), "oscillator-norm", prm,
             std::abs(np.value - 1.0), 1e-10);
      if (n <= 8) {
        for (int n2 = 0; n2 < n; ++n2) {
          const oscillator::OscState other{n2, params};
          auto cross = [&](double x) {
            return oscillator::psi_x(st, x) * oscillator::psi_x(other, x);
          };
          const auto o = quad::integrate_interval(cross, -half_width, half_width, opt.quad);
          Params p2 = prm;
          p2["n2"] = n2;
          record(part, tag("m%d-n%02d-orth-%d", ip, n, n2), "oscillator-orthogonality", p2,
                 std::abs(o.value), 1e-10);
        }
      }
    });
  }
  return out;
}

SuiteResult run_plane_wave(const VerifyOptions&) {
  SuiteResult out{"plane-wave", {"plane-wave-expansion"}, {}};
  struct Config {
    std::vector<double> p;
    std::vector<double> r;
  };
  const Config configs[] = {
      {{0.3, -0.2, 0.5}, {1.0, 0.4, -0.7}},
      {{1.2, 0.0, 0.0}, {0.0, 0.9, 1.1}},
      {{-0.6, 1.1, 0.8}, {1.3, -0.5, 1.2}},
      {{0.2, 0.4, -0.1, 0.6}, {0.8, -0.3, 0.5, 0.2}},
      {{1.0, -0.5, 0.7, 0.3}, {-0.4, 1.2, 0.6, -0.9}},
      {{0.9, 0.9, -0.9, 0.9}, {0.7, -1.1, 0.4, 1.0}},
  };
  for (int i = 0; i < 6; ++i) {
    const auto& c = configs[i];
    double dot = 0.0;
    double p2 = 0.0;
    double r2 = 0.0;
    for (std::size_t k = 0; k < c.p.size(); ++k) {
      dot += c.p[k] * c.r[k];
      p2 += c.p[k] * c.p[k];
      r2 += c.r[k] * c.r[k];
    }
    const std::complex<double> exact{std::cos(dot), std::sin(dot)};
    const std::complex<double> sum =
        hypersphere::plane_wave_partial_sum({c.p}, {c.r}, 20);
    record(out.checks, tag("config%d", i), "plane-wave-expansion",
           {{"N", static_cast<double>(c.p.size())}, {"p", std::sqrt(p2)}, {"r", std::sqrt(r2)},
            {"p_dot_r", dot}},
           std::abs(sum - exact), 1e-8);
  }
  return out;
}

}  // namespace

int SuiteResult::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const Check& c) { return c.pass; }));
}

int SuiteResult::failed() const { return static_cast<int>(checks.size()) - passed(); }

int Report::total() const {
  int n = 0;
  for (const auto& s : suites) {
    n += static_cast<int>(s.checks.size());
  }
  return n;
}

int Report::passed() const {
  int n = 0;
  for (const auto& s : suites) {
    n += s.passed();
  }
  return n;
}

void record(std::vector<Check>& out, std::string id, std::string identity, Params parameters,
            double error, double tolerance, std::string note) {
  Check c;
  c.id = std::move(id);
  c.identity = std::move(identity);
  c.parameters = std::move(parameters);
  c.error = error;
  c.tolerance = tolerance;
  c.pass = error <= tolerance;  // false for NaN
  c.note = std::move(note);
  out.push_back(std::move(c));
}

const std::vector<SuiteInfo>& registry() {
  static const std::vector<SuiteInfo> suites = [] {
    std::vector<SuiteInfo> v = {
        {"angular", {"harmonic-orthonormality"},
         "orthonormality of hyperspherical harmonics, l <= 3, N in {3, 4}", run_angular},
        {"coefficient-extraction", {"generating-coefficient"},
         "z^n coefficient of the closed generating function reproduces F(p)",
         run_coefficient_extraction},
        {"fourier", {"radial-fourier-transform", "momentum-sign"},
         "momentum radial function against the radial Fourier integral", run_fourier},
        {"gegenbauer", {"gegenbauer-contiguous"}, "Gegenbauer contiguous relation", run_gegenbauer},
        {"gegenbauer-generating", {"gegenbauer-generating-series"},
         "Gegenbauer generating-function expansion", run_gegenbauer_generating},
        {"generating-function", {"generating-series", "generating-hankel"},
         "series and Laplace-Hankel forms of the momentum generating function",
         run_generating_function},
        {"hankel", {"laplace-hankel"}, "Laplace transform of r^{nu+1} J_nu(pr)", run_hankel},
        {"laguerre",
         {"laguerre-weighted-norm", "laguerre-generating-coefficients", "laguerre-derivative"},
         "Laguerre weighted norm, generating coefficients and derivative relation", run_laguerre},
        {"laguerre-generating", {"laguerre-shifted-generating"},
         "shifted Laguerre generating function", run_laguerre_generating},
        {"n3-reduction", {"ground-state-momentum", "radial-fourier-transform"},
         "three-dimensional states against the textbook ground state", run_n3_reduction},
        {"normalization", {"position-norm", "momentum-norm", "momentum-orthogonality"},
         "radial norms in both spaces and momentum orthogonality in n", run_normalization},
        {"oscillator-kernel", {"kernel-phased", "kernel-unphased", "kernel-separation"},
         "smoothed completeness kernels of the phased and unphased momentum bases",
         run_oscillator_kernel},
        {"oscillator-phase",
         {"oscillator-fourier-phase", "oscillator-norm", "oscillator-orthogonality"},
         "Fourier transform of psi_n(x) against (-i)^n psi'_n(p)", run_oscillator_phase},
        {"plane-wave", {"plane-wave-expansion"}, "partial sums of the plane-wave expansion",
         run_plane_wave},
    };
    std::sort(v.begin(), v.end(), [](const SuiteInfo& a, const SuiteInfo& b) { return a.id < b.id; });
    return v;
  }();
  return suites;
}

const SuiteInfo* find_suite(const std::string& id) {
  for (const auto& s : registry()) {
    if (s.id == id) {
      return &s;
    }
  }
  return nullptr;
}

Report run_suites(std::vector<std::string> ids, const VerifyOptions& options) {
  if (ids.empty()) {
    for (const auto& s : registry()) {
      ids.push_back(s.id);
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Report report;
  report.quad = options.quad;
  for (const auto& id : ids) {
    const SuiteInfo* info = find_suite(id);
    if (info == nullptr) {
      throw std::invalid_argument("unknown suite: " + id);
    }
  }
  for (const auto& id : ids) {
    report.suites.push_back(find_suite(id)->run(options));
  }
  return report;
}

}  // namespace nhydro::verify
