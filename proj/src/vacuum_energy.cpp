#include "qscatter/vacuum_energy.hpp"

#include <cmath>

#include "qscatter/dirichlet_limit.hpp"
#include "qscatter/errors.hpp"
#include "qscatter/quadrature.hpp"
#include "qscatter/zeta.hpp"

namespace qscatter {

double dispersion_omega(Dispersion d, double k) {
  return d == Dispersion::Massless ? std::abs(k) : std::sqrt(k * k + 1.0);
}

double dirichlet_casimir_energy(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("a must be finite and > 0");
  return kPi / (4.0 * a) * riemann_zeta({-1.0, 0.0}).real();
}

std::complex<double> zeta_regularized_mode_sum(double a, std::complex<double> s) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("a must be finite and > 0");
  if (2.0 * s == std::complex<double>(1.0, 0.0))
    throw PoleError("E_d(s) has a pole at 2s = 1");
  return 0.5 * std::pow(std::complex<double>(kPi / (2.0 * a)), -2.0 * s) * riemann_zeta(2.0 * s);
}

namespace {

template <class Fn>
double integrand(Fn amplitudes, double k, Dispersion d, double step) {
  if (!(k > 0.0)) throw InvalidArgument("k must be > 0");
  return dispersion_omega(d, k) * phase_sum_derivative(amplitudes, k, step) / (4.0 * kPi);
}

}  // namespace

double vacuum_energy_integrand(const DeltaPairParams& p, double k, Dispersion d, double step) {
  return integrand([&](double q) { return double_delta_amplitudes(p, q); }, k, d, step);
}

double vacuum_energy_integrand(const KinkDeltaParams& p, double k, Dispersion d, double step) {
  return integrand([&](double q) { return kink_amplitudes(p, q); }, k, d, step);
}

VacuumEnergyResult truncated_vacuum_energy(const DeltaPairParams& p,
                                           const std::vector<double>& bound_omegas, double k_min,
                                           double k_max, std::size_t panels) {
  if (!(k_min > 0.0) || !(k_max > k_min)) throw InvalidArgument("need 0 < k_min < k_max");
  VacuumEnergyResult r;
  for (double w : bound_omegas) r.bound_sum += w;
  r.continuum_part = integrate([&](double k) { return vacuum_energy_integrand(p, k); }, k_min,
                               k_max, panels, 16);
  r.total = r.bound_sum + r.continuum_part;
  r.convention = "full-line density folded to k > 0; free density subtracted";
  r.k_min = k_min;
  r.k_max = k_max;
  return r;
}

ModeSumTable mode_sum_difference(const std::vector<double>& momenta, double a,
                                 double ground_omega) {
  if (!(a > 0.0)) throw InvalidArgument("a must be > 0");
  ModeSumTable t;
  t.a = a;
  t.ground_omega = ground_omega;
  double sum = 0.0;
  for (std::size_t i = 0; i < momenta.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const double kf = kPi * n / (2.0 * a);
    ModeSumRow row{n, std::sqrt(momenta[i] * momenta[i] + 1.0), std::sqrt(kf * kf + 1.0), 0.0};
    sum += row.omega_kink - row.omega_free;
    row.partial_sum = sum;
    t.rows.push_back(row);
  }
  t.caveat =
      "diagnostic only: partial sums are not expected to converge without mass "
      "renormalisation, which is not performed";
  return t;
}

ModeSumTable kink_dirichlet_mode_sum_difference(double a, int n_max) {
  if (n_max < 1) throw InvalidArgument("n_max must be positive");
  const auto ground = kink_ground_state(a);
  if (!ground) throw OutOfRegime("kink Dirichlet mode sum needs a > a_c");
  std::vector<double> ks;
  for (const DirichletMode& m : kink_dirichlet_spectrum(a, n_max)) ks.push_back(m.k);
  return mode_sum_difference(ks, a, ground->omega);
}

}  // namespace qscatter
