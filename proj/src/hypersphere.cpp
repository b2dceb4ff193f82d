#include "nhydro/hypersphere.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nhydro/specfun.hpp"

namespace nhydro::hypersphere {

namespace {

using std::numbers::pi;

// 2 alpha_j = N - j - 1
double alpha_j(int N, int j) { return 0.5 * (N - j - 1); }

void require_dimension(int N) {
  if (N < 3) {
    throw std::invalid_argument("dimension must be at least 3");
  }
}

}  // namespace

int AngularChain::level(int j) const {
  if (j == 1) {
    return l;
  }
  const int idx = j - 2;
  if (idx < 0 || idx >= static_cast<int>(mu.size())) {
    throw std::out_of_range("AngularChain::level index");
  }
  const int v = mu[static_cast<std::size_t>(idx)];
  return idx + 1 == static_cast<int>(mu.size()) ? std::abs(v) : v;
}

void validate_chain(const AngularChain& chain, int N) {
  require_dimension(N);
  if (chain.l < 0) {
    throw std::invalid_argument("chain ordering violated: l must be non-negative");
  }
  if (static_cast<int>(chain.mu.size()) != N - 2) {
    throw std::invalid_argument("chain length " + std::to_string(chain.mu.size()) +
                                " does not match dimension " + std::to_string(N) +
                                " (expected " + std::to_string(N - 2) + " entries)");
  }
  int upper = chain.l;
  for (std::size_t i = 0; i < chain.mu.size(); ++i) {
    const bool last = i + 1 == chain.mu.size();
    const int v = chain.mu[i];
    if (!last && v < 0) {
      throw std::invalid_argument("chain ordering violated: mu_" + std::to_string(i + 2) +
                                  " is negative");
    }
    const int mag = last ? std::abs(v) : v;
    if (mag > upper) {
      throw std::invalid_argument("chain ordering violated: mu_" + std::to_string(i + 2) + " = " +
                                  std::to_string(v) + " exceeds " + std::to_string(upper));
    }
    upper = mag;
  }
}

AngularChain zonal_chain(int l, int N) {
  require_dimension(N);
  return AngularChain{l, std::vector<int>(static_cast<std::size_t>(N - 2), 0)};
}

std::vector<AngularChain> enumerate_chains(int l, int N) {
  require_dimension(N);
  std::vector<AngularChain> out;
  AngularChain cur{l, std::vector<int>(static_cast<std::size_t>(N - 2), 0)};
  std::function<void(std::size_t, int)> fill = [&](std::size_t idx, int upper) {
    if (idx + 1 == cur.mu.size()) {
      for (int m = -upper; m <= upper; ++m) {
        cur.mu[idx] = m;
        out.push_back(cur);
      }
      return;
    }
    for (int v = 0; v <= upper; ++v) {
      cur.mu[idx] = v;
      fill(idx + 1, v);
    }
  };
  fill(0, l);
  return out;
}

CartesianPoint to_cartesian(const SphericalPoint& p, int N) {
  require_dimension(N);
  if (p.dimension() != N) {
    throw std::invalid_argument("to_cartesian: point has " + std::to_string(p.polar.size()) +
                                " polar angles, dimension needs " + std::to_string(N - 2));
  }
  CartesianPoint out{std::vector<double>(static_cast<std::size_t>(N), 0.0)};
  double sines = p.radius;
  for (int j = 1; j <= N - 2; ++j) {
    const double theta = p.polar[static_cast<std::size_t>(j - 1)];
    out.coords[static_cast<std::size_t>(N - j)] = sines * std::cos(theta);
    sines *= std::sin(theta);
  }
  out.coords[0] = sines * std::cos(p.azimuth);
  out.coords[1] = sines * std::sin(p.azimuth);
  return out;
}

CartesianPoint to_cartesian(const SphericalPoint& p) { return to_cartesian(p, p.dimension()); }

SphericalPoint to_spherical(const CartesianPoint& p) {
  const int N = p.dimension();
  require_dimension(N);
  SphericalPoint out;
  out.polar.assign(static_cast<std::size_t>(N - 2), 0.0);
  double sq = 0.0;
  for (double c : p.coords) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("to_spherical: non-finite coordinate");
    }
    sq += c * c;
  }
  out.radius = std::sqrt(sq);
  if (out.radius == 0.0) {
    return out;
  }
  // tail[k] = |(x_1, ..., x_k)|
  std::vector<double> tail(static_cast<std::size_t>(N) + 1, 0.0);
  for (int k = 1; k <= N; ++k) {
    const double c = p.coords[static_cast<std::size_t>(k - 1)];
    tail[static_cast<std::size_t>(k)] = std::hypot(tail[static_cast<std::size_t>(k - 1)], c);
  }
  for (int j = 1; j <= N - 2; ++j) {
    const int k = N - j + 1;  // this angle is measured from x_k
    out.polar[static_cast<std::size_t>(j - 1)] =
        std::atan2(tail[static_cast<std::size_t>(k - 1)], p.coords[static_cast<std::size_t>(k - 1)]);
  }
  double phi = std::atan2(p.coords[1], p.coords[0]);
  if (phi < 0.0) {
    phi += 2.0 * pi;
  }
  if (phi >= 2.0 * pi) {
    phi = 0.0;
  }
  out.azimuth = phi;
  return out;
}

double log_harmonic_norm_constant(const AngularChain& chain, int N) {
  validate_chain(chain, N);
  double log_a = 0.0;
  for (int j = 1; j <= N - 2; ++j) {
    const int deg = chain.level(j) - chain.level(j + 1);
    const double lam = alpha_j(N, j) + chain.level(j + 1);
    // inverse square root of the Gegenbauer norm with weight sin^{2 lam}
    log_a += std::lgamma(lam) +
             0.5 * (specfun::log_factorial(deg) + std::log(deg + lam) - std::log(pi) -
                    (1.0 - 2.0 * lam) * std::numbers::ln2 - std::lgamma(deg + 2.0 * lam));
  }
  return log_a;
}

double harmonic_norm_constant(const AngularChain& chain, int N) {
  return std::exp(log_harmonic_norm_constant(chain, N));
}

ComplexAmplitude harmonic_eval(const AngularChain& chain, const SphericalPoint& p, int N) {
  const double log_a = log_harmonic_norm_constant(chain, N);
  if (p.dimension() != N) {
    throw std::invalid_argument("harmonic_eval: point dimension mismatch");
  }
  double value = std::exp(log_a) / std::sqrt(2.0 * pi);
  for (int j = 1; j <= N - 2; ++j) {
    const int upper = chain.level(j);
    const int lower = chain.level(j + 1);
    const double theta = p.polar[static_cast<std::size_t>(j - 1)];
    const double lam = alpha_j(N, j) + lower;
    value *= specfun::gegenbauer_eval({upper - lower, lam}, std::cos(theta));
    if (lower > 0) {
      value *= std::pow(std::sin(theta), lower);
    }
  }
  const double phase = chain.m() * p.azimuth;
  return {value * std::cos(phase), value * std::sin(phase)};
}

double unit_sphere_area(int N) {
  require_dimension(N);
  return 2.0 * std::pow(pi, 0.5 * N) / std::tgamma(0.5 * N);
}

ComplexAmplitude angular_norm(const AngularChain& a, const AngularChain& b, int N,
                              const quad::QuadratureSpec& spec) {
  validate_chain(a, N);
  validate_chain(b, N);
  if (a.m() != b.m()) {
    return {0.0, 0.0};
  }
  const int order = std::max(spec.node_count / 8, 2 * (a.l + b.l) + N + 32);
  const quad::GaussRule& rule = quad::gauss_legendre(order);
  const int dims = N - 2;

  // Tensor product over theta_1..theta_{N-2}; the azimuthal integral of
  // e^{i(m-m')phi} is 2 pi because the m agree.
  SphericalPoint pt{1.0, std::vector<double>(static_cast<std::size_t>(dims), 0.0), 0.0};
  std::vector<std::size_t> idx(static_cast<std::size_t>(dims), 0);
  const std::size_t q = rule.nodes.size();
  ComplexAmplitude total{0.0, 0.0};
  while (true) {
    double w = 1.0;
    for (int j = 1; j <= dims; ++j) {
      const std::size_t i = idx[static_cast<std::size_t>(j - 1)];
      const double theta = 0.5 * pi * (1.0 + rule.nodes[i]);
      pt.polar[static_cast<std::size_t>(j - 1)] = theta;
      w *= 0.5 * pi * rule.weights[i] * std::pow(std::sin(theta), N - 1 - j);
    }
    total += w * harmonic_eval(a, pt, N) * std::conj(harmonic_eval(b, pt, N));
    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == q) {
      idx[d] = 0;
      ++d;
    }
    if (d == idx.size()) {
      break;
    }
  }
  return 2.0 * pi * total;
}

ComplexAmplitude plane_wave_partial_sum(const CartesianPoint& p_vec, const CartesianPoint& r_vec,
                                        int l_max) {
  const int N = p_vec.dimension();
  require_dimension(N);
  if (r_vec.dimension() != N) {
    throw std::invalid_argument("plane_wave_partial_sum: dimension mismatch");
  }
  if (l_max < 0) {
    throw std::invalid_argument("plane_wave_partial_sum: l_max must be non-negative");
  }
  const SphericalPoint ps = to_spherical(p_vec);
  const SphericalPoint rs = to_spherical(r_vec);
  const double pr = ps.radius * rs.radius;
  const double s = 0.5 * N - 1.0;
  const double prefactor = std::pow(2.0 * pi, 0.5 * N);

  ComplexAmplitude total{0.0, 0.0};
  ComplexAmplitude il{1.0, 0.0};
  for (int l = 0; l <= l_max; ++l) {
    const double kernel = specfun::bessel_j_scaled({l + s}, s, pr);
    if (kernel != 0.0) {
      ComplexAmplitude angular{0.0, 0.0};
      for (const AngularChain& c : enumerate_chains(l, N)) {
        angular += harmonic_eval(c, rs, N) * std::conj(harmonic_eval(c, ps, N));
      }
      total += il * kernel * angular;
    }
    il *= ComplexAmplitude{0.0, 1.0};
  }
  return prefactor * total;
}

}  // namespace nhydro::hypersphere
