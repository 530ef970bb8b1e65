#pragma once

// Independent direct solution of -psi'' + U(x) psi = omega^2 psi.  Delta terms
// enter only through their exact jump conditions; smooth parts are integrated
// with fixed-step RK4.  Nothing here uses the closed-form amplitudes.

#include <string>
#include <vector>

#include "qscatter/dirichlet_limit.hpp"
#include "qscatter/scattering_core.hpp"

namespace qscatter {

struct DeltaTerm {
  double strength = 0.0;
  double position = 0.0;
};

enum class SmoothTerm {
  None,
  /// 1 - theta(a - |x|) 2 sech^2 x (constant offset 1 everywhere)
  TruncatedPT,
  /// -2 sech^2 x on the whole line, no offset
  FullLinePT,
};

struct PotentialSpec {
  std::vector<DeltaTerm> deltas;
  SmoothTerm smooth = SmoothTerm::None;
  /// Half-width of the TruncatedPT window.
  double window_a = 0.0;
  /// Matching radius for the asymptotic plane waves.
  double x_max = 13.0;

  static PotentialSpec two_delta(double alpha, double beta, double a);
  static PotentialSpec kink_delta(double alpha, double beta, double a);
  static PotentialSpec single_delta(double strength, double position = 0.0);
  static PotentialSpec full_line_pt(double x_max = 20.0);

  /// Asymptotic value of U (1 for TruncatedPT, otherwise 0).
  double background() const;
  /// Smooth part of U including the background.  `inside` selects the window
  /// branch at the window edges.
  double smooth_value(double x, bool inside) const;
  bool inside_window(double x) const;
  /// Throws InvalidArgument unless the deltas and window lie inside (-x_max, x_max).
  void validate() const;
};

struct OracleScatteringResult {
  cplx sigma;
  cplx sigma_l;
  cplx rho_r;
  cplx rho_l;
  /// Interior amplitudes on the basis e^{+-ikx} (or the PT modes f_{+-k} for
  /// TruncatedPT), extracted between the outermost deltas.
  cplx A_r, B_r, A_l, B_l;
  double step = 0.0;
  double x_max = 0.0;
  std::vector<std::string> warnings;

  Amplitudes amplitudes() const;
};

/// Requires k > 0 and step <= 1e-3 (AccuracyError otherwise).
OracleScatteringResult solve_scattering_numeric(const PotentialSpec& potential, double k,
                                                double step = 1e-3);

struct BoundStateSearch {
  std::vector<double> kappas;
  std::vector<std::string> warnings;
};

/// Shooting: decaying solutions from both ends are matched by their Wronskian;
/// roots in kappa are bracketed on `scan_points` samples and bisected to 1e-10.
BoundStateSearch solve_bound_states_numeric(const PotentialSpec& potential, double kappa_min,
                                            double kappa_max, double step = 1e-3,
                                            int scan_points = 600);

/// max over interior points of | -psi''_fd + U psi - omega^2 psi |, U without
/// the deltas.  The grid must be uniform and no delta may sit strictly inside it.
double ode_residual(const SampledWaveFunction& psi, const PotentialSpec& potential,
                    double omega_sq);

}  // namespace qscatter
