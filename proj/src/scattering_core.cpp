#include "qscatter/scattering_core.hpp"

#include <cmath>
#include <string>

#include "qscatter/errors.hpp"

namespace qscatter {

namespace {

constexpr cplx I{0.0, 1.0};

void require_positive_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw InvalidArgument("real momentum must be finite and > 0, got " + std::to_string(k));
}

}  // namespace

DeltaPairParams::DeltaPairParams(double alpha, double beta, double a)
    : alpha_(alpha), beta_(beta), a_(a) {
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw InvalidArgument("delta strengths must be finite");
  if (!(a > 0.0) || !std::isfinite(a))
    throw InvalidArgument("half-separation a must be finite and > 0");
}

SMatrix2x2 SMatrix2x2::adjoint() const {
  SMatrix2x2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = std::conj(m[j][i]);
  return r;
}

SMatrix2x2 SMatrix2x2::operator*(const SMatrix2x2& rhs) const {
  SMatrix2x2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
  return r;
}

double SMatrix2x2::unitarity_defect() const {
  const SMatrix2x2 p = (*this) * adjoint();
  double defect = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      defect = std::max(defect, std::abs(p.m[i][j] - (i == j ? 1.0 : 0.0)));
  return defect;
}

NondimResult nondimensionalize(const PhysicalQuantities& q, double scale, NondimModel model) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw InvalidArgument("rescaling mass must be finite and > 0");
  const DeltaPairParams params(scale * q.alpha, scale * q.beta, q.a);
  if (model == NondimModel::TwoDelta)
    return {params, q.t / scale, (q.x + q.a) / scale - q.a};
  return {params, q.t / scale, q.x / scale};
}

cplx delta_denominator(const DeltaPairParams& p, cplx k) {
  const double ab = p.alpha() * p.beta();
  return ab * (std::exp(4.0 * I * p.a() * k) - 1.0) + 4.0 * k * k +
         2.0 * I * k * (p.alpha() + p.beta());
}

Amplitudes double_delta_amplitudes(const DeltaPairParams& p, double kr) {
  require_positive_k(kr);
  const cplx k = kr;
  const double al = p.alpha(), be = p.beta(), a = p.a();
  const cplx D = delta_denominator(p, k);
  if (D == 0.0) throw NumericDegeneracy("Delta(k) vanished on the real axis");

  const cplx e2 = std::exp(2.0 * I * a * k);
  const cplx e4 = e2 * e2;
  const cplx em2 = 1.0 / e2;

  Amplitudes r;
  r.sigma_r = 4.0 * k * k / D;
  r.sigma_l = r.sigma_r;
  r.rho_r = -I * em2 * (be * e4 * (2.0 * k - I * al) + al * (2.0 * k + I * be)) / D;
  r.rho_l = -I * em2 * (al * e4 * (2.0 * k - I * be) + be * (2.0 * k + I * al)) / D;
  r.A_r = 2.0 * k * (2.0 * k + I * be) / D;
  r.B_r = -2.0 * I * k * be * e2 / D;
  r.A_l = -2.0 * I * k * al * e2 / D;
  r.B_l = 2.0 * k * (2.0 * k + I * al) / D;
  return r;
}

SMatrix2x2 s_matrix(const Amplitudes& amp) {
  SMatrix2x2 s;
  s.m = {{{amp.sigma_r, amp.rho_l}, {amp.rho_r, amp.sigma_l}}};
  return s;
}

PhaseShiftPair phase_shifts(const SMatrix2x2& S, double k,
                            const std::optional<PhaseShiftPair>& previous, double unitarity_tol) {
  const double defect = S.unitarity_defect();
  if (!(defect <= unitarity_tol))
    throw InconsistentInput("S-matrix is not unitary (defect " + std::to_string(defect) + ")");

  const cplx sigma = 0.5 * (S(0, 0) + S(1, 1));
  const cplx root = std::sqrt(S(0, 1) * S(1, 0));
  cplx lp = sigma + root;
  cplx lm = sigma - root;

  PhaseShiftPair out;
  out.k = k;
  if (!previous) {
    out.lambda_plus = lp;
    out.lambda_minus = lm;
    out.delta_plus = 0.5 * std::arg(lp);
    out.delta_minus = 0.5 * std::arg(lm);
    return out;
  }

  // Keep each eigenvalue on the branch closest to its predecessor.
  const double keep = std::abs(lp - previous->lambda_plus) + std::abs(lm - previous->lambda_minus);
  const double swap = std::abs(lm - previous->lambda_plus) + std::abs(lp - previous->lambda_minus);
  if (swap < keep) std::swap(lp, lm);

  const auto continue_phase = [](double prev_delta, cplx lambda) {
    const double jump = std::remainder(std::arg(lambda) - 2.0 * prev_delta, 2.0 * kPi);
    return prev_delta + 0.5 * jump;
  };
  out.lambda_plus = lp;
  out.lambda_minus = lm;
  out.delta_plus = continue_phase(previous->delta_plus, lp);
  out.delta_minus = continue_phase(previous->delta_minus, lm);
  return out;
}

std::vector<PhaseShiftPair> phase_shift_sweep(const std::function<Amplitudes(double)>& amplitudes,
                                              const std::vector<double>& ks) {
  std::vector<PhaseShiftPair> out;
  out.reserve(ks.size());
  std::optional<PhaseShiftPair> prev;
  for (double k : ks) {
    prev = phase_shifts(s_matrix(amplitudes(k)), k, prev);
    out.push_back(*prev);
  }
  return out;
}

double phase_sum_derivative(const std::function<Amplitudes(double)>& amplitudes, double k,
                            double step) {
  if (!(step > 0.0)) throw InvalidArgument("finite-difference step must be > 0");
  if (!(k > step))
    throw InvalidArgument("momentum must exceed the finite-difference step");
  const PhaseShiftPair centre = phase_shifts(s_matrix(amplitudes(k)), k);
  const PhaseShiftPair up = phase_shifts(s_matrix(amplitudes(k + step)), k + step, centre);
  const PhaseShiftPair down = phase_shifts(s_matrix(amplitudes(k - step)), k - step, centre);
  const double sum_up = up.delta_plus + up.delta_minus;
  const double sum_down = down.delta_plus + down.delta_minus;
  return (sum_up - sum_down) / (2.0 * step);
}

double spectral_density_shift(const DeltaPairParams& p, double k, DensityConvention convention,
                              double step) {
  const double d = phase_sum_derivative(
      [&p](double q) { return double_delta_amplitudes(p, q); }, k, step);
  return convention == DensityConvention::HalfLine ? d / (2.0 * kPi) : d / (4.0 * kPi);
}

JostPair jost_factors(double alpha, double a, cplx k) {
  const cplx e = std::exp(I * k * a);
  return {k + I * alpha * e * std::cos(k * a), k + alpha * e * std::sin(k * a)};
}

}  // namespace qscatter
