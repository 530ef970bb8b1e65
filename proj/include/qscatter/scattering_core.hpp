#pragma once

// Closed-form scattering data for the double Dirac-delta potential
//
//     U(x) = alpha * delta(x + a) + beta * delta(x - a)
//
// in dimensionless units, with -psi'' + U psi = k^2 psi.  The jump condition
// at a delta of strength g is psi'(x+) - psi'(x-) = g psi(x), so g > 0 is a
// wall and g < 0 a well.

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace qscatter {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Couplings and half-separation of the two-delta potential.
class DeltaPairParams {
 public:
  /// Throws InvalidArgument unless a > 0 and all values are finite.
  DeltaPairParams(double alpha, double beta, double a);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double a() const noexcept { return a_; }
  bool equal_strengths() const noexcept { return alpha_ == beta_; }

 private:
  double alpha_;
  double beta_;
  double a_;
};

/// The eight scattering coefficients at one momentum.
///
/// Right-incident: e^{ikx} + rho_r e^{-ikx} left of the potential,
/// sigma_r e^{ikx} to the right, A_r u_+(x) + B_r u_-(x) between the deltas.
/// Left-incident is the mirror image.  For the two-delta potential
/// u_{+-} = e^{+-ikx}; for the kink system they are the Poschl-Teller modes.
struct Amplitudes {
  cplx sigma_r;
  cplx sigma_l;
  cplx rho_r;
  cplx rho_l;
  cplx A_r;
  cplx B_r;
  cplx A_l;
  cplx B_l;
};

/// [[sigma_r, rho_l], [rho_r, sigma_l]].
struct SMatrix2x2 {
  std::array<std::array<cplx, 2>, 2> m;

  const cplx& operator()(int i, int j) const { return m[i][j]; }
  SMatrix2x2 adjoint() const;
  SMatrix2x2 operator*(const SMatrix2x2& rhs) const;
  /// max |(S S^dagger - I)_ij|.
  double unitarity_defect() const;
};

/// Eigenphases of S: e^{2 i delta_pm} = sigma +- sqrt(rho_l rho_r).
///
/// The eigenvalues are kept so a subsequent grid point can continue the
/// square-root branch and the phase unwrapping.
struct PhaseShiftPair {
  double delta_plus = 0.0;
  double delta_minus = 0.0;
  double k = 0.0;
  cplx lambda_plus{1.0, 0.0};
  cplx lambda_minus{1.0, 0.0};
};

enum class DensityConvention {
  /// (1/2pi) d(delta_+ + delta_-)/dk
  HalfLine,
  /// (1/4pi) d(delta_+ + delta_-)/dk
  FullLine,
};

/// Equal-strength Jost factors, Delta(k) = 4 J0(k) J1(k).
struct JostPair {
  cplx J0;
  cplx J1;
};

enum class NondimModel { TwoDelta, Kink };

struct PhysicalQuantities {
  double alpha = 0.0;
  double beta = 0.0;
  double a = 1.0;
  double t = 0.0;
  double x = 0.0;
};

struct NondimResult {
  DeltaPairParams params;
  double t;
  double x;
};

/// Rescales physical couplings and coordinates by a mass scale.
///
/// TwoDelta: x + a -> (x + a)/scale, t -> t/scale, alpha, beta -> scale * (.).
/// Kink:     x -> x/scale, t -> t/scale, alpha, beta -> scale * (.).
/// The half-separation is taken to be already dimensionless and passes through.
NondimResult nondimensionalize(const PhysicalQuantities& physical, double scale,
                               NondimModel model = NondimModel::TwoDelta);

/// Delta(k) = alpha beta (e^{4iak} - 1) + 4k^2 + 2ik(alpha + beta).  Entire in k.
cplx delta_denominator(const DeltaPairParams& p, cplx k);

/// Requires real k > 0.
Amplitudes double_delta_amplitudes(const DeltaPairParams& p, double k);

SMatrix2x2 s_matrix(const Amplitudes& amp);

/// Eigenphases of S.  With `previous`, the eigenvalue labelling and both
/// phases are continued from it; otherwise principal branches are used.
/// Throws InconsistentInput when S is not unitary to `unitarity_tol`.
PhaseShiftPair phase_shifts(const SMatrix2x2& S, double k,
                            const std::optional<PhaseShiftPair>& previous = std::nullopt,
                            double unitarity_tol = 1e-8);

/// Phase shifts along an ascending grid, each point continued from the last.
std::vector<PhaseShiftPair> phase_shift_sweep(const std::function<Amplitudes(double)>& amplitudes,
                                              const std::vector<double>& ks);

/// d(delta_+ + delta_-)/dk by central differences around k with the given step.
double phase_sum_derivative(const std::function<Amplitudes(double)>& amplitudes, double k,
                            double step = 1e-5);

/// rho_S(k) - rho_S0 for the two-delta potential.
double spectral_density_shift(const DeltaPairParams& p, double k,
                              DensityConvention convention = DensityConvention::HalfLine,
                              double step = 1e-5);

/// Equal-strength factorisation; `alpha` is the common strength.
JostPair jost_factors(double alpha, double a, cplx k);

}  // namespace qscatter
