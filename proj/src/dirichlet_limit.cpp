#include "qscatter/dirichlet_limit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qscatter/errors.hpp"

namespace qscatter {

namespace {

constexpr cplx I{0.0, 1.0};

// Real reductions along k > 0: h_odd = 2i e^{iak} g_odd, h_even = 2 e^{iak} g_even.
double g_odd(double k, double a, double t) { return k * std::sin(a * k) + t * std::cos(a * k); }
double g_even(double k, double a, double t) { return k * std::cos(a * k) - t * std::sin(a * k); }

double dg_odd(double k, double a, double t) {
  return std::sin(a * k) + a * k * std::cos(a * k) - a * t * std::sin(a * k);
}
double dg_even(double k, double a, double t) {
  return std::cos(a * k) - a * k * std::sin(a * k) - a * t * std::cos(a * k);
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void normalize_l2(SampledWaveFunction& wf) {
  double norm2 = 0.0;
  for (std::size_t i = 1; i < wf.x.size(); ++i)
    norm2 += 0.5 * (wf.x[i] - wf.x[i - 1]) * (std::norm(wf.values[i]) + std::norm(wf.values[i - 1]));
  if (!(norm2 > 0.0)) throw NumericDegeneracy("cannot L2-normalise a null wave function");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& v : wf.values) v *= inv;
  wf.normalization = Normalization::L2;
}

}  // namespace

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n < 2) throw InvalidArgument("a grid needs at least two points");
  std::vector<double> x(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) x[i] = lo + h * static_cast<double>(i);
  x.back() = hi;
  return x;
}

std::vector<DirichletMode> delta_dirichlet_momenta(double a, int n_max) {
  if (!(a > 0.0)) throw InvalidArgument("half-separation a must be > 0");
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1");
  std::vector<DirichletMode> modes;
  modes.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n)
    modes.push_back({n, kPi * n / (2.0 * a), n % 2 == 0 ? Parity::Odd : Parity::Even,
                     System::TwoDelta});
  return modes;
}

SampledWaveFunction delta_mode_wavefunction(const DirichletMode& mode,
                                            std::span<const double> grid) {
  SampledWaveFunction wf;
  wf.x.assign(grid.begin(), grid.end());
  wf.values.reserve(grid.size());
  for (double x : grid)
    wf.values.emplace_back(mode.parity == Parity::Odd ? std::sin(mode.k * x) : std::cos(mode.k * x));
  return wf;
}

std::vector<cplx> strong_coupling_roots(const DeltaPairParams& p, int count) {
  if (count < 1) throw InvalidArgument("count must be >= 1");
  const double ab = p.alpha() * p.beta();
  if (ab == 0.0) throw InvalidArgument("strong-coupling roots need two non-zero strengths");
  const auto f = [&](cplx k) { return delta_denominator(p, k) / ab; };

  const double step = std::min(0.01, kPi / (20.0 * p.a()));
  const double k_max = (count + 2) * kPi / (2.0 * p.a());
  std::vector<cplx> roots;
  double prev2 = std::abs(f(step)), prev1 = std::abs(f(2 * step));
  for (double k = 3 * step; k <= k_max && static_cast<int>(roots.size()) < count; k += step) {
    const double cur = std::abs(f(k));
    if (prev1 < prev2 && prev1 <= cur) {
      cplx z = k - step;
      for (int it = 0; it < 100; ++it) {
        const double h = 1e-7 * std::max(1.0, std::abs(z));
        const cplx d = (f(z + h) - f(z - h)) / (2.0 * h);
        const cplx dz = f(z) / d;
        z -= dz;
        if (std::abs(dz) < 1e-15 * std::max(1.0, std::abs(z))) break;
      }
      if (std::abs(f(z)) < 1e-10 && z.real() > 0.0) roots.push_back(z);
    }
    prev2 = prev1;
    prev1 = cur;
  }
  if (static_cast<int>(roots.size()) < count)
    throw RootIsolationError("strong-coupling scan found too few roots", {});
  return roots;
}

cplx h_odd(cplx k, double a) {
  const double t = std::tanh(a);
  return std::exp(2.0 * I * a * k) * (k + I * t) - (k - I * t);
}

cplx h_even(cplx k, double a) {
  const double t = std::tanh(a);
  return std::exp(2.0 * I * a * k) * (k + I * t) + (k - I * t);
}

cplx kink_delta1(cplx k, double a) {
  const double s = 1.0 / std::cosh(a), t = std::tanh(a);
  const cplx e4 = std::exp(4.0 * I * a * k);
  return s * s * (t * (e4 - 1.0) - I * k * (3.0 + e4)) - 2.0 * I * k * (k * k - 2.0 * I * k * t - 1.0);
}

double critical_separation() {
  const double ac = bisect([](double a) { return a * std::tanh(a) - 1.0; }, 0.5, 2.0, 1e-15);
  return ac;
}

std::vector<DirichletMode> kink_dirichlet_spectrum(double a, int count) {
  if (count < 1) throw InvalidArgument("count must be >= 1");
  const double ac = critical_separation();
  if (!(a > ac))
    throw OutOfRegime("kink Dirichlet spectrum is implemented for a > a_c = " + std::to_string(ac));
  const double t = std::tanh(a);
  const double step = std::min(0.01, kPi / (20.0 * a));
  const double k_max = (count + 4) * kPi / (2.0 * a) + 2.0;

  struct Family {
    Parity parity;
    double (*g)(double, double, double);
    double (*dg)(double, double, double);
  };
  const Family families[] = {{Parity::Odd, g_odd, dg_odd}, {Parity::Even, g_even, dg_even}};

  std::vector<DirichletMode> modes;
  std::vector<std::pair<double, double>> diagnostic;
  for (const Family& fam : families) {
    const auto g = [&](double k) { return fam.g(k, a, t); };
    // k = 0 is a trivial zero of g_even; start the scan one step away.
    double k_lo = step, g_lo = g(k_lo);
    diagnostic.emplace_back(k_lo, g_lo);
    while (k_lo < k_max) {
      const double k_hi = k_lo + step;
      const double g_hi = g(k_hi);
      diagnostic.emplace_back(k_hi, g_hi);
      if ((g_lo < 0.0) != (g_hi < 0.0) || g_hi == 0.0) {
        double root = bisect(g, k_lo, k_hi, 1e-12);
        for (int it = 0; it < 5; ++it) {
          const double d = fam.dg(root, a, t);
          if (d == 0.0) break;
          const double next = root - g(root) / d;
          if (next < k_lo || next > k_hi) break;
          root = next;
        }
        const double residual = std::abs(fam.parity == Parity::Odd ? h_odd(root, a) : h_even(root, a));
        if (residual >= 1e-10)
          throw RootIsolationError("refined root misses |h| < 1e-10 at k = " + std::to_string(root),
                                   diagnostic);
        modes.push_back({0, root, fam.parity, System::KinkDelta});
      }
      k_lo = k_hi;
      g_lo = g_hi;
    }
  }
  std::sort(modes.begin(), modes.end(),
            [](const DirichletMode& l, const DirichletMode& r) { return l.k < r.k; });
  if (static_cast<int>(modes.size()) < count)
    throw RootIsolationError("found " + std::to_string(modes.size()) + " roots below k = " +
                                 std::to_string(k_max) + ", wanted " + std::to_string(count),
                             diagnostic);
  modes.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) modes[static_cast<std::size_t>(i)].n = i + 1;
  return modes;
}

std::optional<GroundStateRoot> kink_ground_state(double a) {
  if (!(a > 0.0)) throw InvalidArgument("half-separation a must be > 0");
  if (!(a > critical_separation())) return std::nullopt;
  const double t = std::tanh(a);
  // -i h_even(i kappa)
  const auto g = [&](double kappa) { return std::exp(-2.0 * a * kappa) * (kappa + t) + (kappa - t); };
  constexpr double eps = 1e-8;
  if ((g(eps) < 0.0) == (g(1.0) < 0.0)) return std::nullopt;
  const double kappa = bisect(g, eps, 1.0, 1e-16);
  return GroundStateRoot{kappa, a, std::sqrt(1.0 - kappa * kappa)};
}

SampledWaveFunction kink_mode_wavefunction(cplx k, Parity parity, double a,
                                           std::span<const double> grid,
                                           Normalization normalization) {
  constexpr double slack = 1e-12;
  SampledWaveFunction wf;
  wf.x.assign(grid.begin(), grid.end());
  wf.values.reserve(grid.size());
  for (double x : grid) {
    if (x < -a - slack || x > a + slack)
      throw InvalidArgument("wave-function grid leaves [-a, a]");
    const cplx s = std::sin(k * x), c = std::cos(k * x);
    const double th = std::tanh(x);
    wf.values.push_back(parity == Parity::Odd ? k * s + th * c : k * c - th * s);
  }
  if (normalization == Normalization::L2) normalize_l2(wf);
  return wf;
}

}  // namespace qscatter
