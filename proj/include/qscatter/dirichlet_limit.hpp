#pragma once

// Impenetrable-wall limit alpha, beta -> +inf of both systems: the spectra of
// the confined problem on [-a, a] and its wave functions.

#include <optional>
#include <span>
#include <vector>

#include "qscatter/kink_scattering.hpp"
#include "qscatter/scattering_core.hpp"

namespace qscatter {

enum class Parity { Even, Odd };
enum class System { TwoDelta, KinkDelta };

struct DirichletMode {
  int n = 0;
  double k = 0.0;
  Parity parity = Parity::Even;
  System system = System::TwoDelta;
};

/// Imaginary-momentum even root k = i kappa_b of h_even.
struct GroundStateRoot {
  double kappa_b = 0.0;
  double a = 0.0;
  /// sqrt(1 - kappa_b^2)
  double omega = 0.0;
};

enum class Normalization { Unnormalized, L2 };

struct SampledWaveFunction {
  std::vector<double> x;
  std::vector<cplx> values;
  Normalization normalization = Normalization::Unnormalized;
};

/// Uniform grid of n >= 2 points including both end points.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

/// k_n = pi n / (2a), n = 1..n_max.  Odd n: cosine modes (Even), even n: sine modes (Odd).
std::vector<DirichletMode> delta_dirichlet_momenta(double a, int n_max);

/// sin(k_n x) (Odd) or cos(k_n x) (Even) sampled on the grid.
SampledWaveFunction delta_mode_wavefunction(const DirichletMode& mode, std::span<const double> grid);

/// Complex zeros of Delta(k)/(alpha beta) close to the positive real axis, the
/// finite-strength survivors of k_n.  Intended for large equal-sign strengths.
std::vector<cplx> strong_coupling_roots(const DeltaPairParams& p, int count);

/// h_odd(k) = e^{2iak}(k + it) - (k - it)
cplx h_odd(cplx k, double a);
/// h_even(k) = e^{2iak}(k + it) + (k - it)
cplx h_even(cplx k, double a);

/// Alternative normalisation constant: the alpha-linear part Delta_1^K(k) of
/// Delta^K at beta = alpha (up to the factor 2).
cplx kink_delta1(cplx k, double a);

/// Positive root of a tanh a = 1, separating short and long separations.
double critical_separation();

/// The `count` smallest positive real roots of h_odd and h_even, sorted.
/// Throws OutOfRegime for a <= a_c, RootIsolationError if the scan fails.
std::vector<DirichletMode> kink_dirichlet_spectrum(double a, int count);

/// Even imaginary root; empty for a <= a_c.
std::optional<GroundStateRoot> kink_ground_state(double a);

/// Shape k sin kx + tanh x cos kx (Odd) or k cos kx - tanh x sin kx (Even).
/// The grid must lie in [-a, a]; L2 normalisation uses the trapezoidal rule.
SampledWaveFunction kink_mode_wavefunction(cplx k, Parity parity, double a,
                                           std::span<const double> grid,
                                           Normalization normalization = Normalization::Unnormalized);

}  // namespace qscatter
