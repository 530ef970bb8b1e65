#include "qscatter/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "qscatter/numeric_oracle.hpp"

namespace qscatter {

namespace {

double amplitude_gap(const Amplitudes& x, const Amplitudes& y) {
  const cplx a[] = {x.sigma_r, x.sigma_l, x.rho_r, x.rho_l, x.A_r, x.B_r, x.A_l, x.B_l};
  const cplx b[] = {y.sigma_r, y.sigma_l, y.rho_r, y.rho_l, y.A_r, y.B_r, y.A_l, y.B_l};
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

CountComparison compare(std::vector<Pole> poles, const PotentialSpec& potential,
                        const SearchRegion& region) {
  CountComparison c;
  for (const Pole& pole : poles)
    if (pole.kind == PoleKind::Bound && !pole.removable) c.pole_kappas.push_back(pole.k.imag());
  std::sort(c.pole_kappas.begin(), c.pole_kappas.end());
  c.oracle_kappas = solve_bound_states_numeric(potential, 1e-3, region.im_max, 1e-3, 600).kappas;
  c.counts_match = c.pole_kappas.size() == c.oracle_kappas.size();
  if (!c.counts_match) {
    c.max_kappa_gap = std::numeric_limits<double>::infinity();
    return c;
  }
  for (std::size_t i = 0; i < c.pole_kappas.size(); ++i)
    c.max_kappa_gap = std::max(c.max_kappa_gap, std::abs(c.pole_kappas[i] - c.oracle_kappas[i]));
  return c;
}

void push(std::vector<CheckResult>& out, std::string name, double value, double tol) {
  out.push_back({std::move(name), value, tol, value < tol});
}

std::string fmt(double v) {
  std::string s = std::to_string(v);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

CountComparison compare_bound_states(const DeltaPairParams& p, const SearchRegion& region) {
  return compare(find_poles(p, region), PotentialSpec::two_delta(p.alpha(), p.beta(), p.a()),
                 region);
}

CountComparison compare_bound_states(const KinkDeltaParams& p, const SearchRegion& region) {
  return compare(find_poles(p, region), PotentialSpec::kink_delta(p.alpha(), p.beta(), p.a()),
                 region);
}

std::vector<CheckResult> run_verify_suite(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const double s = o.tolerance_scale;
  const DeltaPairParams dp(o.alpha, o.beta, o.a);
  const KinkDeltaParams kp(o.alpha, o.beta, o.a);

  double gap2 = 0.0, gapk = 0.0, flux = 0.0;
  for (double k : {0.3, 1.3, 2.7}) {
    const auto r2 = solve_scattering_numeric(PotentialSpec::two_delta(o.alpha, o.beta, o.a), k);
    const auto rk = solve_scattering_numeric(PotentialSpec::kink_delta(o.alpha, o.beta, o.a), k);
    gap2 = std::max(gap2, amplitude_gap(r2.amplitudes(), double_delta_amplitudes(dp, k)));
    gapk = std::max(gapk, amplitude_gap(rk.amplitudes(), kink_amplitudes(kp, k)));
    for (const auto* r : {&r2, &rk})
      flux = std::max(flux, std::abs(std::norm(r->sigma) + std::norm(r->rho_r) - 1.0));
  }
  push(out, "oracle.two_delta.amplitudes", gap2, 1e-8 * s);
  push(out, "oracle.kink.amplitudes", gapk, 1e-8 * s);
  push(out, "oracle.flux", flux, 1e-6 * s);

  double u2 = 0.0, uk = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double k = 0.05 + i * (5.0 - 0.05) / 199.0;
    u2 = std::max(u2, s_matrix(double_delta_amplitudes(dp, k)).unitarity_defect());
    uk = std::max(uk, s_matrix(kink_amplitudes(kp, k)).unitarity_defect());
  }
  push(out, "unitarity.two_delta", u2, 1e-12 * s);
  push(out, "unitarity.kink", uk, 1e-10 * s);

  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(-1.0, 1.0);
  double j2 = 0.0, jk = 0.0;
  const DeltaPairParams dsym(o.alpha, o.alpha, o.a);
  const KinkDeltaParams ksym(o.alpha, o.alpha, o.a);
  for (int i = 0; i < 20; ++i) {
    const cplx k(re(rng), im(rng));
    const cplx d = delta_denominator(dsym, k);
    const JostPair j = jost_factors(o.alpha, o.a, k);
    j2 = std::max(j2, std::abs(d - 4.0 * j.J0 * j.J1) / std::max(std::abs(d), 1e-300));
    const cplx dk = kink_denominator(ksym, k);
    const KinkJostPair jj = kink_jost_factors(o.alpha, o.a, k);
    jk = std::max(jk, std::abs(dk - 4.0 * jj.J0K * jj.J1K) / std::max(std::abs(dk), 1e-300));
  }
  push(out, "jost.two_delta", j2, 1e-12 * s);
  push(out, "jost.kink", jk, 1e-12 * s);

  if (o.figures) {
    const SearchRegion region = figure_region();
    for (double alpha : {-0.1, -2.0, 0.1, 2.0}) {
      const auto c2 = compare_bound_states(DeltaPairParams(alpha, alpha, 1.0), region);
      push(out, "figures.two_delta.alpha=" + fmt(alpha) + ".bound_match", c2.max_kappa_gap,
           1e-6 * s);
      const auto ck = compare_bound_states(KinkDeltaParams(alpha, alpha, 1.0), region);
      push(out, "figures.kink.alpha=" + fmt(alpha) + ".bound_match", ck.max_kappa_gap, 1e-6 * s);
    }
  }
  return out;
}

}  // namespace qscatter
