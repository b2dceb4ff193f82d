#include "nhydro/errata.hpp"

#include <sstream>

#include "json.hpp"

namespace nhydro::errata {

const std::vector<Entry>& ledger() {
  static const std::vector<Entry> entries = {
      {"E1", "Cartesian chart",
       "The first Cartesian coordinate repeats sin(theta_1) and drops the remaining sines.",
       "x_1 = r sin(theta_1) ... sin(theta_{N-2}) cos(phi), the partner of x_2 with sin(phi).",
       "angular"},
      {"E2", "Position radial function",
       "The exponential carries a stray parameter in its exponent.",
       "R_nl(r) = N_nl omega^{N/2} (omega r)^l exp(-omega r / 2) L_{n-l-1}^{(2l+N-2)}(omega r); "
       "unit norm confirms it.",
       "normalization"},
      {"E3", "Shifted Laguerre generating function",
       "The prefactor power of (1 - z) does not match a series starting at z^{l+1}.",
       "sum_{n>l} z^n L_{n-l-1}^{(2l+N-2)}(x) = z^{l+1} (1-z)^{-(2l+N-1)} exp(-x z / (1-z)).",
       "laguerre-generating"},
      {"E4", "Momentum generating function",
       "The power of p in the generating function is garbled and its z prefactor carries a "
       "spurious sign (-z)^{l+1}.",
       "G = z^{l+1} (1-z^2) 2 delta (2p)^nu Gamma(nu+3/2) / (sqrt(pi) (p^2+delta^2)^{nu+3/2} "
       "(1-2zx+z^2)^{nu+3/2}) with nu = l+N/2-1; the p^{N/2-1} of the Fourier kernel is kept "
       "outside G.",
       "generating-function"},
      {"E5", "Momentum normalisation constant",
       "The overall constant contains a stray factorial on Gamma(l+(N-1)/2) and an unreduced "
       "power of 2.",
       "F(p) = N_nl 2^{2l+N} delta^{N/2} Gamma(l+(N-1)/2) / sqrt(pi) (delta p)^l "
       "(p^2+delta^2)^{-(l+(N+1)/2)} C_{n-l-1}^{(l+(N-1)/2)}(x), fixed by unit norm and the "
       "quadrature oracle.",
       "fourier"},
      {"E6", "Momentum phase",
       "The printed phase is -(i^l).",
       "The Fourier transform of R_nl Y gives (-i)^l F(p) Y(p^) with F as above; the measured "
       "relative sign is +1 for every state tested.",
       "fourier"},
      {"E7", "Harmonic normalisation",
       "The Gamma factor inside the normalisation product is typeset ambiguously between "
       "Gamma(alpha_j + alpha_{j+1}) and Gamma(alpha_j + mu_{j+1}).",
       "Gamma(alpha_j + mu_{j+1}) with alpha_j = (N-j-1)/2; the other reading fails unit norm.",
       "angular"},
      {"E8", "Oscillator completeness integral",
       "The integral over the Bargmann variable is written from 0 to infinity.",
       "It is an integral over the complex plane. It is not evaluated; the two completeness "
       "kernels are compared after smoothing with a shifted Gaussian.",
       "oscillator-kernel"},
      {"E9", "Oscillator momentum scaling",
       "The scaled variables are printed without their arguments.",
       "X = sqrt(m w) x and P = p / sqrt(m w); psi'_n(p) = (m w)^{-1/4} h_n(p / sqrt(m w)) and the "
       "Fourier transform of psi_n(x) is (-i)^n psi'_n(p).",
       "oscillator-phase"},
  };
  return entries;
}

std::string render_text() {
  std::ostringstream os;
  for (const auto& e : ledger()) {
    os << e.id << "  " << e.topic << "\n"
       << "    issue:      " << e.issue << "\n"
       << "    resolution: " << e.resolution << "\n"
       << "    verified:   verify " << e.suite << "\n";
  }
  return os.str();
}

std::string render_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : ledger()) {
    arr.push_back({{"id", e.id},
                   {"topic", e.topic},
                   {"issue", e.issue},
                   {"resolution", e.resolution},
                   {"suite", e.suite}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace nhydro::errata
