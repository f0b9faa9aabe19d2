#pragma once

/**
 * @file bestapprox.hpp
 * @brief Best approximation E_n(f)_{p,alpha} by polynomials of degree <= n - 1.
 *
 * All solvers return a Polynomial in the Chebyshev basis. Each solver works on
 * a fixed discretisation of [-1, 1]; the reported `error` is then re-measured
 * with weighted_norm on the continuous definition, so any discretisation gap
 * shows up in `error - discrete_error` rather than being hidden.
 */

#include <vector>

#include "gensmooth/funcspace.hpp"
#include "gensmooth/polynomial.hpp"

namespace gensmooth {

struct BestApproxOptions {
  // p = inf: exchange on cos(k pi / N), N = max(linf_intervals, 16 n);
  // endpoints dropped for alpha > 0.
  int linf_intervals = 4096;
  int max_exchange_iterations = 100;
  double level_tol = 1e-8;

  // 1 <= p < inf: IRLS on a composite Gauss rule with panels of width
  // <= 1 / lp_panels_per_unit, split at the breakpoints of f.
  int lp_panels_per_unit = 32;
  int irls_max_iterations = 500;
  double irls_tol = 1e-9;
  double irls_floor = 1e-12;

  // p = 2 projection coefficients.
  double l2_rel_tol = 1e-13;

  NormOptions norm;
};

struct BestApproxResult {
  Polynomial poly;
  double error = 0.0;           // continuous ||f - poly||_{p,alpha}
  double discrete_error = 0.0;  // objective on the solver's discretisation
  int iterations = 0;
  bool converged = false;
  // p = inf only: final reference set and the signed weighted errors on it.
  std::vector<double> reference;
  std::vector<double> reference_errors;
};

/// Orthogonal projection in L_{2,alpha} onto degree <= n - 1, computed in the
/// orthonormal Jacobi basis for the weight (1 - x^2)^{2 alpha}.
BestApproxResult best_l2(const TestFunction& f, int n, double alpha, const BestApproxOptions& options = {});

/// Weighted minimax approximation by discrete Remez exchange.
BestApproxResult best_linf(const TestFunction& f, int n, double alpha, const BestApproxOptions& options = {});

/// Iteratively reweighted least squares for 1 <= p < inf.
BestApproxResult best_lp(const TestFunction& f, int n, const SpaceParams& params,
                         const BestApproxOptions& options = {});

/// Dispatch on p; never worse than the zero polynomial.
BestApproxResult best_approx(const TestFunction& f, int n, const SpaceParams& params,
                             const BestApproxOptions& options = {});

}  // namespace gensmooth
