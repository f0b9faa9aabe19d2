#pragma once

#include <span>
#include <vector>

#include "gensmooth/funcspace.hpp"
#include "gensmooth/translation.hpp"

namespace gensmooth {

struct ModulusOptions {
  int t_grid = 33;  // odd, so that t = 0 is sampled
  bool refine = true;
  double refine_width = 1e-6;  // relative to delta
  TranslationOptions translation;
  NormOptions norm;
};

struct ModulusResult {
  double value = 0.0;
  double argmax_t = 0.0;
  int t_grid_size = 0;
  bool refined = false;
  bool converged = true;
};

/// ||tau_t f - f||_{p,alpha}, the inner norm of the modulus.
WeightedNormResult translation_defect_norm(const TestFunction& f, double t, const SpaceParams& params,
                                           const ModulusOptions& options = {});

/// sup over |t| <= delta of ||tau_t f - f||_{p,alpha}: maximum over a
/// symmetric equispaced t grid, refined by golden section around the grid
/// maximiser (leftmost on ties). Both signs of t are sampled.
ModulusResult modulus(const TestFunction& f, double delta, const SpaceParams& params,
                      const ModulusOptions& options = {});

/// modulus() for nondecreasing deltas. Each value is at least the previous
/// one, since the suprema are taken over nested sets.
std::vector<ModulusResult> modulus_curve(const TestFunction& f, std::span<const double> deltas,
                                         const SpaceParams& params, const ModulusOptions& options = {});

}  // namespace gensmooth
