#include "qscatter/kink_scattering.hpp"

#include <cmath>
#include <string>

#include "qscatter/errors.hpp"

namespace qscatter {

namespace {

constexpr cplx I{0.0, 1.0};

// Recurring factors of the closed forms:
//   inner(g) = s^2 + (k - it)(2k + ig)
//   wall(g)  = s^2 + g(t - ik)
struct KinkFactors {
  double s2;
  double t;
  cplx k;

  cplx inner(double g) const { return s2 + (k - I * t) * (2.0 * k + I * g); }
  cplx wall(double g) const { return s2 + g * (t - I * k); }
};

}  // namespace

KinkDeltaParams::KinkDeltaParams(double alpha, double beta, double a)
    : alpha_(alpha), beta_(beta), a_(a), s_(1.0 / std::cosh(a)), t_(std::tanh(a)) {
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw InvalidArgument("delta strengths must be finite");
  if (!(a > 0.0) || !std::isfinite(a))
    throw InvalidArgument("half-separation a must be finite and > 0");
}

cplx pt_mode(cplx k, double x) { return std::exp(I * k * x) * (std::tanh(x) - I * k); }

cplx pt_mode_derivative(cplx k, double x) {
  const double th = std::tanh(x);
  const double sech2 = 1.0 - th * th;
  return std::exp(I * k * x) * (sech2 + I * k * (th - I * k));
}

cplx kink_denominator(const KinkDeltaParams& p, cplx k) {
  const KinkFactors f{p.s() * p.s(), p.t(), k};
  return f.inner(p.alpha()) * f.inner(p.beta()) -
         std::exp(4.0 * I * p.a() * k) * f.wall(p.alpha()) * f.wall(p.beta());
}

cplx kink_transmission_numerator(cplx k) { return 4.0 * (k * k * k * k + k * k); }

bool kink_removable_zero(cplx k, double tol) { return std::abs(k * k + 1.0) < tol; }

Amplitudes kink_amplitudes(const KinkDeltaParams& p, double kr) {
  if (!(kr > 0.0) || !std::isfinite(kr))
    throw InvalidArgument("real momentum must be finite and > 0, got " + std::to_string(kr));
  const cplx k = kr;
  const double al = p.alpha(), be = p.beta(), t = p.t(), s2 = p.s() * p.s();
  const KinkFactors f{s2, t, k};
  const cplx D = kink_denominator(p, k);
  if (D == 0.0) throw NumericDegeneracy("Delta^K(k) vanished on the real axis");

  const cplx e2 = std::exp(2.0 * I * p.a() * k);
  const cplx em2 = 1.0 / e2;
  // wall factor with the conjugate momentum sign, s^2 + g(t + ik)
  const auto wall_plus = [&](double g) { return s2 + g * (t + I * k); };
  const auto outer = [&](double g) { return s2 + (k + I * t) * (2.0 * k - I * g); };

  Amplitudes r;
  r.sigma_r = kink_transmission_numerator(k) / D;
  r.sigma_l = r.sigma_r;
  r.rho_r = (e2 * f.wall(be) * outer(al) - em2 * f.inner(be) * wall_plus(al)) / D;
  r.rho_l = (e2 * f.wall(al) * outer(be) - em2 * f.inner(al) * wall_plus(be)) / D;
  r.A_r = 2.0 * I * k * f.inner(be) / D;
  r.B_r = -2.0 * k * e2 * (be * (k + I * t) + I * s2) / D;
  r.A_l = 2.0 * k * e2 * (al * (k + I * t) + I * s2) / D;
  r.B_l = -2.0 * I * k * f.inner(al) / D;
  return r;
}

KinkJostPair kink_jost_factors(double alpha, double a, cplx k) {
  const double s = 1.0 / std::cosh(a);
  const KinkFactors f{s * s, std::tanh(a), k};
  const cplx inner = f.inner(alpha);
  const cplx outer = std::exp(2.0 * I * a * k) * f.wall(alpha);
  return {0.5 * (inner + outer), 0.5 * (inner - outer)};
}

double kink_spectral_density_shift(const KinkDeltaParams& p, double k,
                                   DensityConvention convention, double step) {
  const double d =
      phase_sum_derivative([&p](double q) { return kink_amplitudes(p, q); }, k, step);
  return convention == DensityConvention::HalfLine ? d / (2.0 * kPi) : d / (4.0 * kPi);
}

}  // namespace qscatter
