#pragma once

// Zeros of the amplitude denominators in the complex momentum plane, located
// with the argument principle on nested rectangles and polished by Newton.

#include <functional>
#include <string>
#include <vector>

#include "qscatter/dirichlet_limit.hpp"
#include "qscatter/kink_scattering.hpp"
#include "qscatter/scattering_core.hpp"

namespace qscatter {

using AnalyticFunction = std::function<cplx(cplx)>;

struct SearchRegion {
  double re_min = -2.0;
  double re_max = 2.0;
  double im_min = -1.5;
  double im_max = 2.0;
  /// Maximum recursive subdivision depth.
  int max_depth = 14;
  /// Initial Gauss-Legendre nodes per rectangle edge.
  int base_nodes = 64;

  bool contains(cplx k, double margin = 0.0) const;
};

/// Window used for the pole-taxonomy reproductions at a = 1.
SearchRegion figure_region();

/// Number of zeros of f inside the rectangle, (1/2 pi i) \oint f'/f dk rounded.
/// Throws ContourProximityError when a zero sits on or next to the contour.
int count_zeros(const AnalyticFunction& f, const SearchRegion& region);

/// Newton with a central-difference derivative until |f| < tol.
/// Throws RefinementFailure with the last iterate otherwise.
cplx refine_root(const AnalyticFunction& f, cplx seed, int max_iterations = 100,
                 double tol = 1e-12);

/// Same, also reporting the number of Newton steps taken.
cplx refine_root(const AnalyticFunction& f, cplx seed, int max_iterations, double tol,
                 int& iterations);

enum class PoleKind { Bound, Antibound, Resonance };
enum class Channel { J0, J1, Full };

std::string to_string(PoleKind kind);
std::string to_string(Channel channel);

/// Throws InvalidArgument for |k| <= 1e-9 and UnphysicalRoot for off-axis
/// upper-half-plane points.
PoleKind classify(cplx k);

struct Pole {
  cplx k;
  PoleKind kind = PoleKind::Bound;
  /// |denominator| at k
  double residual = 0.0;
  Channel channel = Channel::Full;
  /// Zero of the denominator cancelled by the transmission numerator.
  bool removable = false;
};

/// Zeros of an arbitrary analytic function inside the region (no classification).
std::vector<cplx> find_zeros(const AnalyticFunction& f, const SearchRegion& region);

/// Zeros of Delta(k); equal strengths are searched per Jost channel.
std::vector<Pole> find_poles(const DeltaPairParams& p, const SearchRegion& region);
/// Zeros of Delta^K(k); equal strengths are searched per Jost channel.
std::vector<Pole> find_poles(const KinkDeltaParams& p, const SearchRegion& region);

struct PoleCounts {
  int bound = 0;
  int antibound = 0;
  int resonance = 0;
};

/// Tally by kind; `include_removable` decides whether removable zeros count.
PoleCounts tally(const std::vector<Pole>& poles, bool include_removable = true);

}  // namespace qscatter
