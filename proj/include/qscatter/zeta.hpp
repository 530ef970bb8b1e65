#pragma once

#include <complex>

namespace qscatter {

/// Riemann zeta function for complex s != 1.
///
/// Re(s) >= 1/2: Borwein's accelerated alternating (eta) series.
/// Re(s) <  1/2: functional equation onto the accelerated series at 1 - s.
/// Throws PoleError at s = 1.
std::complex<double> riemann_zeta(std::complex<double> s);

/// Gamma function for complex argument (Lanczos, g = 7).
std::complex<double> complex_gamma(std::complex<double> z);

}  // namespace qscatter
