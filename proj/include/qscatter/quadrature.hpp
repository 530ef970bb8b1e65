#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qscatter {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, nodes from Newton iteration on P_n.
GaussLegendreRule gauss_legendre(std::size_t n);

/// Composite Gauss-Legendre integral of f over [lo, hi] with `panels` equal panels.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 std::size_t panels = 16, std::size_t order = 16);

}  // namespace qscatter
