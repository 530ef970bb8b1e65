#pragma once

// Two deltas on top of the truncated sine-Gordon kink fluctuation potential,
//
//     U(x) = alpha delta(x + a) + beta delta(x - a) + 1 - theta(a - |x|) 2 sech^2 x.
//
// k is the asymptotic momentum; outside the window omega^2 = k^2 + 1.  Inside
// the window the modes are f_{+-k}(x) = e^{+-ikx}(tanh x -+ ik).

#include "qscatter/scattering_core.hpp"

namespace qscatter {

/// Couplings and half-separation with sech(a), tanh(a) cached.
class KinkDeltaParams {
 public:
  KinkDeltaParams(double alpha, double beta, double a);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double a() const noexcept { return a_; }
  /// sech(a)
  double s() const noexcept { return s_; }
  /// tanh(a)
  double t() const noexcept { return t_; }
  bool equal_strengths() const noexcept { return alpha_ == beta_; }

 private:
  double alpha_;
  double beta_;
  double a_;
  double s_;
  double t_;
};

/// f_k(x) = e^{ikx}(tanh x - ik).
cplx pt_mode(cplx k, double x);
/// d f_k / dx.
cplx pt_mode_derivative(cplx k, double x);

/// Delta^K(k); entire in k.  Vanishes identically at k = +-i, where the
/// basis f_{+-k} degenerates (see kink_removable_zero).
cplx kink_denominator(const KinkDeltaParams& p, cplx k);

/// Numerator 4(k^4 + k^2) shared by sigma_r and sigma_l.
cplx kink_transmission_numerator(cplx k);

/// True when Delta^K(k) = 0 at k is cancelled by the transmission numerator
/// (k = +-i), i.e. not a pole of sigma.
bool kink_removable_zero(cplx k, double tol = 1e-6);

/// Requires real k > 0.
Amplitudes kink_amplitudes(const KinkDeltaParams& p, double k);

/// Equal-strength factors normalised so that Delta^K = 4 J0K J1K.
/// J0K collects the even channel and carries the removable zeros at k = +-i.
struct KinkJostPair {
  cplx J0K;
  cplx J1K;
};

KinkJostPair kink_jost_factors(double alpha, double a, cplx k);

double kink_spectral_density_shift(const KinkDeltaParams& p, double k,
                                   DensityConvention convention = DensityConvention::HalfLine,
                                   double step = 1e-5);

}  // namespace qscatter
