#pragma once

/**
 * @file translation.hpp
 * @brief Generalised translation operator on [-1, 1].
 *
 * For |x| < 1 and s = sqrt(1 - x^2),
 *
 *   tau_t(f, x) = 1 / (pi s^2 cos^4(t/2))
 *                 * int_0^pi (2 A^2 - 1 + B^2) f(B) dphi,
 *
 *   A = s cos t + x sin t cos phi + s (1 - cos t) sin^2 phi,
 *   B = x cos t - s sin t cos phi.
 *
 * The kernel integrates to exactly pi s^2 cos^4(t/2), so tau_t preserves
 * constants and
 *
 *   tau_t(f, x) - f(x) = 1 / (pi s^2 cos^4(t/2)) int_0^pi K (f(B) - f(x)) dphi.
 *
 * The library evaluates this difference form, which avoids the cancellation
 * of O(1) terms near the endpoints and makes t = 0 reproduce f exactly.
 *
 * B = cos(theta) cos t - sin(theta) sin t cos(phi) with x = cos(theta), so
 * |B| <= 1. Substituting t -> -t, phi -> pi - phi leaves A and B unchanged,
 * hence tau_{-t} = tau_t.
 */

#include <span>
#include <vector>

#include "gensmooth/funcspace.hpp"

namespace gensmooth {

struct TranslationOptions {
  /// Largest admissible |t|; must stay below pi where cos^4(t/2) vanishes.
  double t_max = 1.0;
  int phi_order = 64;
  int max_phi_order = 512;
  double rel_tol = 1e-10;
};

struct KernelSample {
  double argument_b = 0.0;
  double weight_a = 0.0;
  double kernel_value = 0.0;
};

/// A, B and 2A^2 - 1 + B^2 at (x, t, phi). Throws domain_error for |x| >= 1.
KernelSample kernel_parts(double x, double t, double phi);

double translate(const TestFunction& f, double t, double x, const TranslationOptions& options = {});

/// tau_t(f, x) - f(x).
double translation_difference(const TestFunction& f, double t, double x, const TranslationOptions& options = {});

std::vector<double> translate_grid(const TestFunction& f, double t, std::span<const double> xs,
                                   const TranslationOptions& options = {});

/// Points x where tau_t f may fail to be smooth: the breakpoints b of f and
/// cos(arccos(b) +- t).
std::vector<double> translation_breakpoints(const TestFunction& f, double t);

/// x -> tau_t(f, x) - f(x) as a test function (interior evaluation only).
TestFunction translation_defect(const TestFunction& f, double t, const TranslationOptions& options = {});

/// Numerical check of whether tau_t maps polynomials of degree k to degree k:
/// for k = 0..max_degree, interpolates tau_t T_k at 4(max_degree + 1)
/// interior Chebyshev points and returns the largest Chebyshev coefficient
/// above degree k, relative to the coefficient norm.
double degree_probe(double t, int max_degree, const TranslationOptions& options = {});

}  // namespace gensmooth
