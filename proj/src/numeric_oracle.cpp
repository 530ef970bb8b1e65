#include "qscatter/numeric_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qscatter/errors.hpp"

namespace qscatter {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kMaxStep = 1e-3;

struct State {
  cplx psi;
  cplx dpsi;
};

State operator+(const State& a, const State& b) { return {a.psi + b.psi, a.dpsi + b.dpsi}; }
State operator*(double s, const State& a) { return {s * a.psi, s * a.dpsi}; }

// Integrates psi'' = (U - omega^2) psi from x0 to x1 with about |x1 - x0|/step
// RK4 steps; the smooth potential branch is fixed for the whole segment.
State rk4_segment(const PotentialSpec& pot, State y, double x0, double x1, double step,
                  cplx omega_sq) {
  const double len = x1 - x0;
  if (len == 0.0) return y;
  const bool inside = pot.inside_window(0.5 * (x0 + x1));
  const int n = std::max(1, static_cast<int>(std::ceil(std::abs(len) / step - 1e-9)));
  const double h = len / n;
  const auto rhs = [&](double x, const State& s) -> State {
    return {s.dpsi, (pot.smooth_value(x, inside) - omega_sq) * s.psi};
  };
  double x = x0;
  for (int i = 0; i < n; ++i) {
    const State k1 = rhs(x, y);
    const State k2 = rhs(x + 0.5 * h, y + (0.5 * h) * k1);
    const State k3 = rhs(x + 0.5 * h, y + (0.5 * h) * k2);
    const State k4 = rhs(x + h, y + h * k3);
    y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    x = x0 + (i + 1) * h;
  }
  return y;
}

bool compact(const PotentialSpec& pot) { return pot.smooth != SmoothTerm::FullLinePT; }

// Outermost points where U stops being constant.
std::pair<double, double> support(const PotentialSpec& pot) {
  if (!compact(pot)) return {-pot.x_max, pot.x_max};
  double lo = 0.0, hi = 0.0;
  bool any = false;
  const auto extend = [&](double x) {
    lo = any ? std::min(lo, x) : x;
    hi = any ? std::max(hi, x) : x;
    any = true;
  };
  for (const DeltaTerm& d : pot.deltas) extend(d.position);
  if (pot.smooth == SmoothTerm::TruncatedPT) {
    extend(-pot.window_a);
    extend(pot.window_a);
  }
  return {lo, hi};
}

double matching_point(const PotentialSpec& pot) {
  double x = 0.0;
  if (pot.deltas.size() >= 2) {
    double lo = pot.deltas.front().position, hi = lo;
    for (const DeltaTerm& d : pot.deltas) lo = std::min(lo, d.position), hi = std::max(hi, d.position);
    x = 0.5 * (lo + hi);
  }
  for (const DeltaTerm& d : pot.deltas)
    if (std::abs(d.position - x) < 1e-9) x += 1e-3;
  return x;
}

// Integrates from `from` to `to` through all breakpoints, applying delta jumps.
// When `probe` lies in between, the state there is stored in `at_probe`.
State propagate(const PotentialSpec& pot, State y, double from, double to, double step,
                cplx omega_sq, double probe, State* at_probe) {
  std::set<double> cuts;
  for (const DeltaTerm& d : pot.deltas) cuts.insert(d.position);
  if (pot.smooth == SmoothTerm::TruncatedPT) {
    cuts.insert(-pot.window_a);
    cuts.insert(pot.window_a);
  }
  cuts.insert(probe);
  const double lo = std::min(from, to), hi = std::max(from, to);
  std::vector<double> points;
  for (double c : cuts)
    if (c > lo && c < hi) points.push_back(c);
  if (from > to) std::reverse(points.begin(), points.end());
  points.push_back(to);

  const bool leftward = from > to;
  const auto jump = [&](double x, State& s) {
    for (const DeltaTerm& d : pot.deltas) {
      if (d.position != x) continue;
      // psi'(x+) - psi'(x-) = g psi(x)
      s.dpsi += (leftward ? -d.strength : d.strength) * s.psi;
    }
  };
  double x = from;
  jump(x, y);
  if (from == to) {
    if (to == probe && at_probe) *at_probe = y;
    return y;
  }
  for (double next : points) {
    y = rk4_segment(pot, y, x, next, step, omega_sq);
    x = next;
    if (x == probe && at_probe) *at_probe = y;
    jump(x, y);
  }
  return y;
}

struct Basis {
  cplx u1, du1, u2, du2;
};

Basis interior_basis(const PotentialSpec& pot, double k, double x) {
  if (pot.smooth == SmoothTerm::TruncatedPT) {
    // f_{+-k}(x) = e^{+-ikx}(tanh x -+ ik)
    const double th = std::tanh(x), sech2 = 1.0 - th * th;
    const cplx ep = std::exp(I * k * x), em = std::exp(-I * k * x);
    return {ep * (th - I * k), ep * (sech2 + I * k * (th - I * k)), em * (th + I * k),
            em * (sech2 - I * k * (th + I * k))};
  }
  const cplx ep = std::exp(I * k * x), em = std::exp(-I * k * x);
  return {ep, I * k * ep, em, -I * k * em};
}

std::pair<cplx, cplx> decompose(const Basis& b, const State& s) {
  const cplx w = b.u1 * b.du2 - b.du1 * b.u2;
  return {(s.psi * b.du2 - s.dpsi * b.u2) / w, (b.u1 * s.dpsi - b.du1 * s.psi) / w};
}

}  // namespace

PotentialSpec PotentialSpec::two_delta(double alpha, double beta, double a) {
  PotentialSpec p;
  p.deltas = {{alpha, -a}, {beta, a}};
  p.x_max = a + 12.0;
  return p;
}

PotentialSpec PotentialSpec::kink_delta(double alpha, double beta, double a) {
  PotentialSpec p = two_delta(alpha, beta, a);
  p.smooth = SmoothTerm::TruncatedPT;
  p.window_a = a;
  return p;
}

PotentialSpec PotentialSpec::single_delta(double strength, double position) {
  PotentialSpec p;
  p.deltas = {{strength, position}};
  p.x_max = std::abs(position) + 12.0;
  return p;
}

PotentialSpec PotentialSpec::full_line_pt(double x_max) {
  PotentialSpec p;
  p.smooth = SmoothTerm::FullLinePT;
  p.x_max = x_max;
  return p;
}

double PotentialSpec::background() const { return smooth == SmoothTerm::TruncatedPT ? 1.0 : 0.0; }

bool PotentialSpec::inside_window(double x) const {
  return smooth == SmoothTerm::TruncatedPT && std::abs(x) < window_a;
}

double PotentialSpec::smooth_value(double x, bool inside) const {
  switch (smooth) {
    case SmoothTerm::None: return 0.0;
    case SmoothTerm::TruncatedPT: {
      if (!inside) return 1.0;
      const double c = std::cosh(x);
      return 1.0 - 2.0 / (c * c);
    }
    case SmoothTerm::FullLinePT: {
      const double c = std::cosh(x);
      return -2.0 / (c * c);
    }
  }
  return 0.0;
}

void PotentialSpec::validate() const {
  if (!(x_max > 0.0)) throw InvalidArgument("x_max must be > 0");
  for (const DeltaTerm& d : deltas) {
    if (!std::isfinite(d.strength)) throw InvalidArgument("delta strength must be finite");
    if (!(std::abs(d.position) < x_max)) throw InvalidArgument("delta outside (-x_max, x_max)");
  }
  if (smooth == SmoothTerm::TruncatedPT && !(window_a > 0.0 && window_a < x_max))
    throw InvalidArgument("PT window must satisfy 0 < a < x_max");
}

Amplitudes OracleScatteringResult::amplitudes() const {
  return {sigma, sigma_l, rho_r, rho_l, A_r, B_r, A_l, B_l};
}

OracleScatteringResult solve_scattering_numeric(const PotentialSpec& pot, double k, double step) {
  pot.validate();
  if (!(k > 0.0) || !std::isfinite(k)) throw InvalidArgument("k must be finite and > 0");
  if (!(step > 0.0) || step > kMaxStep)
    throw AccuracyError("RK4 step must lie in (0, 1e-3] for the accuracy contract");

  OracleScatteringResult out;
  out.step = step;
  out.x_max = pot.x_max;
  const cplx omega_sq = k * k + pot.background();
  auto [lo, hi] = support(pot);
  const double right = compact(pot) ? hi : pot.x_max;
  const double left = compact(pot) ? lo : -pot.x_max;
  if (!compact(pot)) {
    const double tail = 2.0 / std::pow(std::cosh(pot.x_max), 2);
    if (tail > 1e-9) out.warnings.push_back("x_max too small: smooth potential not negligible at the edge");
  }
  const double probe = matching_point(pot);
  const Basis basis = interior_basis(pot, k, probe);

  // Right-incident: sigma e^{ikx} beyond the right edge, integrate leftward.
  {
    State y{std::exp(I * k * right), I * k * std::exp(I * k * right)};
    State mid{};
    const State s = propagate(pot, y, right, left, step, omega_sq, probe, &mid);
    const cplx P = (I * k * s.psi + s.dpsi) / (2.0 * I * k) * std::exp(-I * k * left);
    const cplx Q = (I * k * s.psi - s.dpsi) / (2.0 * I * k) * std::exp(I * k * left);
    out.sigma = 1.0 / P;
    out.rho_r = Q / P;
    const auto [A, B] = decompose(basis, mid);
    out.A_r = A / P;
    out.B_r = B / P;
  }
  // Left-incident: sigma e^{-ikx} beyond the left edge, integrate rightward.
  {
    State y{std::exp(-I * k * left), -I * k * std::exp(-I * k * left)};
    State mid{};
    const State s = propagate(pot, y, left, right, step, omega_sq, probe, &mid);
    // psi = P e^{-ikx} + Q e^{ikx}
    const cplx P = (I * k * s.psi - s.dpsi) / (2.0 * I * k) * std::exp(I * k * right);
    const cplx Q = (I * k * s.psi + s.dpsi) / (2.0 * I * k) * std::exp(-I * k * right);
    out.sigma_l = 1.0 / P;
    out.rho_l = Q / P;
    const auto [A, B] = decompose(basis, mid);
    out.A_l = A / P;
    out.B_l = B / P;
  }
  return out;
}

BoundStateSearch solve_bound_states_numeric(const PotentialSpec& pot, double kappa_min,
                                            double kappa_max, double step, int scan_points) {
  pot.validate();
  if (!(kappa_min > 0.0) || !(kappa_max > kappa_min))
    throw InvalidArgument("kappa range must satisfy 0 < kappa_min < kappa_max");
  if (!(step > 0.0) || step > kMaxStep)
    throw AccuracyError("RK4 step must lie in (0, 1e-3] for the accuracy contract");
  if (scan_points < 2) throw InvalidArgument("need at least two scan points");

  BoundStateSearch out;
  auto [lo, hi] = support(pot);
  double right = compact(pot) ? hi : pot.x_max;
  double left = compact(pot) ? lo : -pot.x_max;
  if (!compact(pot) && kappa_min * (pot.x_max - 1.0) < 3.0)
    out.warnings.push_back("x_max small relative to 1/kappa_min");
  const double probe = matching_point(pot);
  // Beyond the support the decaying start is exact, so the ends may be moved
  // out to enclose the matching point.
  right = std::max(right, probe);
  left = std::min(left, probe);

  // Normalised Wronskian of the two decaying solutions at the probe point.
  const auto wronskian = [&](double kappa) {
    const cplx omega_sq = pot.background() - kappa * kappa;
    State r{}, l{};
    propagate(pot, State{1.0, -kappa}, right, probe, step, omega_sq, probe, &r);
    propagate(pot, State{1.0, kappa}, left, probe, step, omega_sq, probe, &l);
    const double nr = std::hypot(std::abs(r.psi), std::abs(r.dpsi));
    const double nl = std::hypot(std::abs(l.psi), std::abs(l.dpsi));
    return ((l.psi * r.dpsi - l.dpsi * r.psi) / (nr * nl)).real();
  };

  const double dk = (kappa_max - kappa_min) / (scan_points - 1);
  double k_lo = kappa_min, w_lo = wronskian(k_lo);
  for (int i = 1; i < scan_points; ++i) {
    const double k_hi = kappa_min + i * dk;
    const double w_hi = wronskian(k_hi);
    if ((w_lo < 0.0) != (w_hi < 0.0)) {
      double a = k_lo, b = k_hi, fa = w_lo;
      while (b - a > 1e-10) {
        const double m = 0.5 * (a + b);
        const double fm = wronskian(m);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      out.kappas.push_back(0.5 * (a + b));
    }
    k_lo = k_hi;
    w_lo = w_hi;
  }
  return out;
}

double ode_residual(const SampledWaveFunction& psi, const PotentialSpec& pot, double omega_sq) {
  const auto& x = psi.x;
  if (x.size() < 3 || psi.values.size() != x.size())
    throw InvalidGrid("need at least three samples with matching values");
  const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  if (!(h > 0.0)) throw InvalidGrid("grid must be ascending");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::abs((x[i] - x[i - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw InvalidGrid("grid must be uniform");
  for (const DeltaTerm& d : pot.deltas)
    if (d.position > x.front() + 1e-12 && d.position < x.back() - 1e-12)
      throw InvalidGrid("a delta term sits inside the sampling grid");

  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const cplx d2 = (psi.values[i + 1] - 2.0 * psi.values[i] + psi.values[i - 1]) / (h * h);
    const double u = pot.smooth_value(x[i], pot.inside_window(x[i]));
    worst = std::max(worst, std::abs(-d2 + (u - omega_sq) * psi.values[i]));
  }
  return worst;
}

}  // namespace qscatter
