#pragma once

// Adaptive composite quadrature for integrals of the form
//
//   int_{-1}^{1} g(x) (1 - x^2)^gamma dx,
//
// where g may have kinks or weak singularities at interior points. The end
// panels carry the endpoint factor of the weight in a Gauss-Jacobi rule; the
// interior panels use Gauss-Legendre with the weight folded into the
// integrand. Each panel is compared with the sum over its two halves and the
// worst panel is bisected until the summed estimate meets the tolerance.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gensmooth {

struct PanelOptions {
  int order = 10;
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_panels = 4096;
  double min_width = 1e-10;
};

struct PanelResult {
  std::vector<double> values;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  std::size_t panels = 0;
  bool converged = false;
};

using VectorIntegrand = std::function<void(double x, std::span<double> out)>;

/// `breakpoints` are interior points where g is not smooth; they become panel
/// boundaries. Components are estimated jointly; the tolerance applies to the
/// largest component magnitude.
PanelResult integrate_weighted(double gamma, std::span<const double> breakpoints, std::size_t dim,
                               const VectorIntegrand& g, const PanelOptions& options = {});

PanelResult integrate_weighted(double gamma, std::span<const double> breakpoints,
                               const std::function<double(double)>& g, const PanelOptions& options = {});

/// Nodes and effective weights (weight factor included) of a fixed composite
/// rule: [-1, 1] split at `breakpoints`, then into `panels_per_unit` * width
/// uniform pieces, `order` nodes per piece.
struct DiscreteMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;
};

DiscreteMeasure composite_rule(double gamma, std::span<const double> breakpoints, int panels_per_unit,
                               int order);

}  // namespace gensmooth
