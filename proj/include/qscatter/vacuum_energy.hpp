#pragma once

// Zero-point energy of the fluctuation field: the zeta-regularised Dirichlet
// Casimir energy, the phase-shift integrand of the continuum contribution and
// a diagnostic kink-minus-free Dirichlet mode sum.

#include <complex>
#include <string>
#include <vector>

#include "qscatter/kink_scattering.hpp"
#include "qscatter/scattering_core.hpp"

namespace qscatter {

enum class Dispersion {
  /// omega = |k|
  Massless,
  /// omega = sqrt(k^2 + 1)
  Massive,
};

double dispersion_omega(Dispersion d, double k);

/// (pi / 4a) zeta(-1) = -pi / (48 a).  Throws InvalidArgument for a <= 0.
double dirichlet_casimir_energy(double a);

/// E_d(s) = 1/2 (pi / 2a)^{-2s} zeta(2s).  Throws PoleError at 2s = 1.
std::complex<double> zeta_regularized_mode_sum(double a, std::complex<double> s);

/// omega(k) (delta_+' + delta_-') / (4 pi).  Defaults: Massless for two deltas,
/// Massive for the kink system.
double vacuum_energy_integrand(const DeltaPairParams& p, double k,
                               Dispersion d = Dispersion::Massless, double step = 1e-5);
double vacuum_energy_integrand(const KinkDeltaParams& p, double k,
                               Dispersion d = Dispersion::Massive, double step = 1e-5);

struct VacuumEnergyResult {
  double bound_sum = 0.0;
  double continuum_part = 0.0;
  double total = 0.0;
  std::string convention;
  double k_min = 0.0;
  double k_max = 0.0;
};

/// Bound-state energies plus the integrand over [k_min, k_max].  A truncated
/// quantity: no renormalisation beyond the free-density subtraction is applied.
VacuumEnergyResult truncated_vacuum_energy(const DeltaPairParams& p,
                                           const std::vector<double>& bound_omegas, double k_min,
                                           double k_max, std::size_t panels = 64);

struct ModeSumRow {
  int n = 0;
  double omega_kink = 0.0;
  double omega_free = 0.0;
  double partial_sum = 0.0;
};

struct ModeSumTable {
  double a = 0.0;
  /// sqrt(1 - kappa_b^2), 0 when no ground state exists
  double ground_omega = 0.0;
  std::vector<ModeSumRow> rows;
  std::string caveat;
};

/// Partial sums of omega_n - sqrt((pi n / 2a)^2 + 1) over the given momenta.
ModeSumTable mode_sum_difference(const std::vector<double>& momenta, double a,
                                 double ground_omega);

/// mode_sum_difference over kink_dirichlet_spectrum(a, n_max).
/// Throws OutOfRegime for a <= a_c.
ModeSumTable kink_dirichlet_mode_sum_difference(double a, int n_max);

}  // namespace qscatter
