#include "qscatter/pole_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "qscatter/errors.hpp"
#include "qscatter/quadrature.hpp"

namespace qscatter {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kAxisTol = 1e-9;
constexpr double kOriginTol = 1e-9;
constexpr double kDedupTol = 1e-8;
constexpr int kPanelOrder = 16;

cplx derivative(const AnalyticFunction& f, cplx z) {
  const double h = 1e-6 * std::max(1.0, std::abs(z));
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

struct ContourMoments {
  cplx m0;  // (1/2 pi i) \oint f'/f
  cplx m1;  // (1/2 pi i) \oint k f'/f
  double min_abs;
  double max_abs;
};

ContourMoments contour_moments(const AnalyticFunction& f, const SearchRegion& r, int panels) {
  const GaussLegendreRule rule = gauss_legendre(kPanelOrder);
  const cplx corners[5] = {{r.re_min, r.im_min}, {r.re_max, r.im_min}, {r.re_max, r.im_max},
                           {r.re_min, r.im_max}, {r.re_min, r.im_min}};
  ContourMoments out{0.0, 0.0, std::numeric_limits<double>::infinity(), 0.0};
  for (int e = 0; e < 4; ++e) {
    const cplx z0 = corners[e], z1 = corners[e + 1];
    const cplx dz = (z1 - z0) / static_cast<double>(panels);
    for (int p = 0; p < panels; ++p) {
      const cplx mid = z0 + (static_cast<double>(p) + 0.5) * dz;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const cplx z = mid + 0.5 * rule.nodes[i] * dz;
        const cplx fz = f(z);
        const double a = std::abs(fz);
        out.min_abs = std::min(out.min_abs, a);
        out.max_abs = std::max(out.max_abs, a);
        if (a == 0.0) throw ContourProximityError("zero of f on the contour");
        const cplx w = rule.weights[i] * 0.5 * dz * derivative(f, z) / fz;
        out.m0 += w;
        out.m1 += z * w;
      }
    }
  }
  out.m0 /= 2.0 * kPi * I;
  out.m1 /= 2.0 * kPi * I;
  return out;
}

struct Winding {
  int count;
  ContourMoments moments;
};

Winding winding(const AnalyticFunction& f, const SearchRegion& region) {
  if (!(region.re_max > region.re_min) || !(region.im_max > region.im_min))
    throw InvalidArgument("search region must have positive width and height");
  int panels = std::max(1, region.base_nodes / kPanelOrder);
  long previous = std::numeric_limits<long>::min();
  for (int attempt = 0; attempt < 10; ++attempt, panels *= 2) {
    const ContourMoments m = contour_moments(f, region, panels);
    if (m.min_abs < 1e-9 * m.max_abs)
      throw ContourProximityError("|f| nearly vanishes on the contour");
    const double w = m.m0.real();
    const long rounded = std::lround(w);
    const bool integral = std::abs(w - static_cast<double>(rounded)) < 0.05 &&
                          std::abs(m.m0.imag()) < 0.05;
    if (integral && rounded == previous) return {static_cast<int>(rounded), m};
    previous = integral ? rounded : std::numeric_limits<long>::min();
  }
  throw ContourProximityError("winding number did not settle; a zero is close to the contour");
}

// Off-centre split fractions so that symmetric zero sets (e.g. the imaginary
// axis) do not land on the new edges.
constexpr double kSplits[] = {0.5 + 0.0371, 0.5 - 0.0613, 0.5 + 0.1129, 0.5 - 0.1417};

struct Search {
  const AnalyticFunction& f;
  std::vector<cplx> roots;

  void add(cplx z) {
    if (std::abs(z) <= kOriginTol) return;
    for (const cplx& r : roots)
      if (std::abs(r - z) < kDedupTol) return;
    roots.push_back(z);
  }

  void run(const SearchRegion& cell, int count, int depth) {
    if (count <= 0) return;
    if (count == 1) {
      // Single zero: the first moment is the zero itself.
      const Winding w = winding(f, cell);
      try {
        const cplx z = refine_root(f, w.moments.m1 / w.moments.m0.real());
        if (cell.contains(z, 1e-12)) {
          add(z);
          return;
        }
      } catch (const RefinementFailure&) {
      }
    }
    if (depth >= cell.max_depth) {
      // Multiple (or origin) zero in a tiny cell: polish from the centre.
      const cplx centre{0.5 * (cell.re_min + cell.re_max), 0.5 * (cell.im_min + cell.im_max)};
      try {
        add(refine_root(f, centre));
      } catch (const RefinementFailure&) {
        if (std::abs(centre) > 1e-6) throw;
      }
      return;
    }
    for (double fx : kSplits) {
      for (double fy : kSplits) {
        const double xs = cell.re_min + fx * (cell.re_max - cell.re_min);
        const double ys = cell.im_min + fy * (cell.im_max - cell.im_min);
        SearchRegion quads[4] = {cell, cell, cell, cell};
        quads[0].re_max = xs, quads[0].im_max = ys;
        quads[1].re_min = xs, quads[1].im_max = ys;
        quads[2].re_max = xs, quads[2].im_min = ys;
        quads[3].re_min = xs, quads[3].im_min = ys;
        int counts[4];
        try {
          int total = 0;
          for (int q = 0; q < 4; ++q) total += counts[q] = winding(f, quads[q]).count;
          if (total != count) continue;
        } catch (const ContourProximityError&) {
          continue;
        }
        for (int q = 0; q < 4; ++q) run(quads[q], counts[q], depth + 1);
        return;
      }
    }
    throw ContourProximityError("could not subdivide a cell without touching a zero");
  }
};

SearchRegion nudged(const SearchRegion& r, double amount) {
  SearchRegion out = r;
  const double dx = amount * (r.re_max - r.re_min), dy = amount * (r.im_max - r.im_min);
  out.re_min -= dx;
  out.re_max += dx * 1.37;
  out.im_min -= dy * 0.73;
  out.im_max += dy * 1.11;
  return out;
}

std::vector<Pole> poles_from_channels(
    const std::vector<std::pair<Channel, AnalyticFunction>>& channels,
    const AnalyticFunction& full, const SearchRegion& region,
    const std::function<bool(cplx)>& removable) {
  std::vector<Pole> poles;
  for (const auto& [channel, fn] : channels) {
    for (const cplx& z : find_zeros(fn, region)) {
      Pole p;
      p.k = z;
      p.channel = channel;
      p.residual = std::abs(full(z));
      p.removable = removable(z);
      p.kind = classify(z);
      poles.push_back(p);
    }
  }
  // Resonances come in mirror pairs k, -conj(k).
  const std::size_t n = poles.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (poles[i].kind != PoleKind::Resonance) continue;
    const cplx mirror = -std::conj(poles[i].k);
    const bool present = std::any_of(poles.begin(), poles.end(),
                                     [&](const Pole& q) { return std::abs(q.k - mirror) < 1e-9; });
    if (!present) {
      Pole m = poles[i];
      m.k = mirror;
      m.residual = std::abs(full(mirror));
      poles.push_back(m);
    }
  }
  std::sort(poles.begin(), poles.end(), [](const Pole& l, const Pole& r) {
    if (l.k.imag() != r.k.imag()) return l.k.imag() > r.k.imag();
    return l.k.real() < r.k.real();
  });
  return poles;
}

}  // namespace

bool SearchRegion::contains(cplx k, double margin) const {
  return k.real() >= re_min - margin && k.real() <= re_max + margin &&
         k.imag() >= im_min - margin && k.imag() <= im_max + margin;
}

SearchRegion figure_region() { return SearchRegion{}; }

int count_zeros(const AnalyticFunction& f, const SearchRegion& region) {
  return winding(f, region).count;
}

cplx refine_root(const AnalyticFunction& f, cplx seed, int max_iterations, double tol,
                 int& iterations) {
  cplx z = seed;
  cplx fz = f(z);
  iterations = 0;
  while (iterations < max_iterations) {
    if (std::abs(fz) < tol) return z;
    const cplx d = derivative(f, z);
    if (d == 0.0) break;
    const cplx step = fz / d;
    z -= step;
    fz = f(z);
    ++iterations;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
    // Converged to rounding level: accept when the step is negligible.
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z)) && std::abs(fz) < 1e3 * tol) return z;
  }
  if (std::abs(fz) < tol) return z;
  throw RefinementFailure("Newton refinement did not reach |f| < tol", z);
}

cplx refine_root(const AnalyticFunction& f, cplx seed, int max_iterations, double tol) {
  int iterations = 0;
  return refine_root(f, seed, max_iterations, tol, iterations);
}

std::string to_string(PoleKind kind) {
  switch (kind) {
    case PoleKind::Bound: return "bound";
    case PoleKind::Antibound: return "antibound";
    case PoleKind::Resonance: return "resonance";
  }
  return "?";
}

std::string to_string(Channel channel) {
  switch (channel) {
    case Channel::J0: return "J0";
    case Channel::J1: return "J1";
    case Channel::Full: return "full";
  }
  return "?";
}

PoleKind classify(cplx k) {
  if (std::abs(k) <= kOriginTol) throw InvalidArgument("k = 0 cannot be classified");
  const bool on_axis = std::abs(k.real()) < kAxisTol;
  if (on_axis) return k.imag() > 0.0 ? PoleKind::Bound : PoleKind::Antibound;
  if (k.imag() > 0.0)
    throw UnphysicalRoot("zero off the imaginary axis in the upper half plane");
  return PoleKind::Resonance;
}

std::vector<cplx> find_zeros(const AnalyticFunction& f, const SearchRegion& region) {
  SearchRegion outer = region;
  int total = -1;
  for (double amount : {0.0, 1e-3, 2.7e-3, 6.1e-3}) {
    outer = nudged(region, amount);
    try {
      total = count_zeros(f, outer);
      break;
    } catch (const ContourProximityError&) {
    }
  }
  if (total < 0) throw ContourProximityError("could not place the outer contour away from zeros");
  Search search{f, {}};
  search.run(outer, total, 0);
  std::vector<cplx> inside;
  for (const cplx& z : search.roots)
    if (region.contains(z, 1e-9)) inside.push_back(z);
  return inside;
}

std::vector<Pole> find_poles(const DeltaPairParams& p, const SearchRegion& region) {
  const AnalyticFunction full = [p](cplx k) { return delta_denominator(p, k); };
  std::vector<std::pair<Channel, AnalyticFunction>> channels;
  if (p.equal_strengths()) {
    const double al = p.alpha(), a = p.a();
    channels.emplace_back(Channel::J0, [al, a](cplx k) { return jost_factors(al, a, k).J0; });
    channels.emplace_back(Channel::J1, [al, a](cplx k) { return jost_factors(al, a, k).J1; });
  } else {
    channels.emplace_back(Channel::Full, full);
  }
  return poles_from_channels(channels, full, region, [](cplx) { return false; });
}

std::vector<Pole> find_poles(const KinkDeltaParams& p, const SearchRegion& region) {
  const AnalyticFunction full = [p](cplx k) { return kink_denominator(p, k); };
  std::vector<std::pair<Channel, AnalyticFunction>> channels;
  if (p.equal_strengths()) {
    const double al = p.alpha(), a = p.a();
    channels.emplace_back(Channel::J0, [al, a](cplx k) { return kink_jost_factors(al, a, k).J0K; });
    channels.emplace_back(Channel::J1, [al, a](cplx k) { return kink_jost_factors(al, a, k).J1K; });
  } else {
    channels.emplace_back(Channel::Full, full);
  }
  return poles_from_channels(channels, full, region,
                             [](cplx k) { return kink_removable_zero(k); });
}

PoleCounts tally(const std::vector<Pole>& poles, bool include_removable) {
  PoleCounts c;
  for (const Pole& p : poles) {
    if (p.removable && !include_removable) continue;
    switch (p.kind) {
      case PoleKind::Bound: ++c.bound; break;
      case PoleKind::Antibound: ++c.antibound; break;
      case PoleKind::Resonance: ++c.resonance; break;
    }
  }
  return c;
}

}  // namespace qscatter
