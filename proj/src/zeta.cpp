#include "qscatter/zeta.hpp"

#include <array>
#include <cmath>

#include "qscatter/errors.hpp"
#include "qscatter/scattering_core.hpp"

namespace qscatter {

namespace {

using lcplx = std::complex<long double>;

constexpr int kBorweinTerms = 64;

// d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built by the term ratio.
std::array<long double, kBorweinTerms + 1> borwein_weights() {
  std::array<long double, kBorweinTerms + 1> d{};
  const long double n = kBorweinTerms;
  long double term = 1.0L / n;  // i = 0 term is (n-1)!/n! = 1/n
  long double sum = term;
  d[0] = n * sum;
  for (int i = 1; i <= kBorweinTerms; ++i) {
    term *= (n + i - 1) * (n - i + 1) * 4.0L / ((2.0L * i - 1) * (2.0L * i));
    sum += term;
    d[i] = n * sum;
  }
  return d;
}

std::complex<double> zeta_right_half(std::complex<double> s) {
  static const auto d = borwein_weights();
  const lcplx ls(s.real(), s.imag());
  lcplx acc = 0.0L;
  for (int k = 0; k < kBorweinTerms; ++k) {
    const lcplx power = std::exp(-ls * std::log(static_cast<long double>(k + 1)));
    const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
    acc += sign * (d[k] - d[kBorweinTerms]) * power;
  }
  const lcplx eta = -acc / d[kBorweinTerms];
  const lcplx factor = 1.0L - std::exp((1.0L - ls) * std::log(2.0L));
  const lcplx z = eta / factor;
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5)
    return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
  z -= 1.0;
  std::complex<double> x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  const std::complex<double> t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

std::complex<double> riemann_zeta(std::complex<double> s) {
  if (s == 1.0) throw PoleError("zeta has a pole at s = 1");
  if (s.real() >= 0.5) return zeta_right_half(s);
  // Near s = 0 the reflected argument sits on the pole; use the Taylor series.
  if (std::abs(s) < 1e-4) {
    constexpr double c1 = -0.91893853320467274178;  // -ln(2 pi) / 2
    constexpr double c2 = -1.00317822795429242560;  // zeta''(0) / 2
    constexpr double c3 = -1.00078519447704240796;  // zeta'''(0) / 6
    return -0.5 + s * (c1 + s * (c2 + s * c3));
  }
  // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
  const std::complex<double> one_minus = 1.0 - s;
  return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(0.5 * kPi * s) *
         complex_gamma(one_minus) * zeta_right_half(one_minus);
}

}  // namespace qscatter
