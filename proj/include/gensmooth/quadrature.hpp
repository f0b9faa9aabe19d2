#pragma once

/**
 * @file quadrature.hpp
 * @brief Gauss rules for Jacobi weights on [-1, 1] and their image on [0, pi].
 *
 * Rules are built from the three-term recurrence of the orthonormal Jacobi
 * polynomials: the nodes are the eigenvalues of the symmetric tridiagonal
 * Jacobi matrix, polished by Newton steps on p_N, and the weights are the
 * Christoffel numbers 1 / sum_k p_k(x_i)^2.
 */

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gensmooth/error.hpp"

namespace gensmooth {

enum class RuleKind { legendre, jacobi, shifted_phi };

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  RuleKind kind = RuleKind::legendre;
  double a = 0.0;  // exponent of (1 - x)
  double b = 0.0;  // exponent of (1 + x)
  int order = 0;

  double lower() const noexcept { return kind == RuleKind::shifted_phi ? 0.0 : -1.0; }
  double upper() const noexcept { return kind == RuleKind::shifted_phi ? M_PI : 1.0; }
  double weight_sum() const noexcept;
};

QuadratureRule gauss_legendre(int order);
QuadratureRule gauss_jacobi(int order, double a, double b);

/// Affine image of a rule on [-1, 1] onto [0, pi].
QuadratureRule shift_to_phi(const QuadratureRule& rule);

/// Shared immutable rules, built once per (order, a, b). Thread-safe.
const QuadratureRule& cached_gauss_jacobi(int order, double a, double b);
const QuadratureRule& cached_phi_rule(int order);

/// Integral of (1 - x)^a (1 + x)^b over [-1, 1].
double jacobi_weight_integral(double a, double b);

/// Recurrence coefficients of the orthonormal Jacobi polynomials:
///   x p_k = beta_{k+1} p_{k+1} + alpha_k p_k + beta_k p_{k-1},  p_0 = 1/sqrt(mu0).
/// alpha has `count` entries (k = 0..count-1), beta has `count` entries
/// (k = 1..count, stored at index k-1).
struct JacobiRecurrence {
  std::vector<double> alpha;
  std::vector<double> beta;
  double mu0 = 0.0;
};

JacobiRecurrence jacobi_recurrence(int count, double a, double b);

/// Values p_0(x)..p_{out.size()-1}(x) of the orthonormal polynomials.
void orthonormal_values(const JacobiRecurrence& rec, double x, std::span<double> out);

/// Sum of weights * g(nodes). Throws non_finite_sample if g is not finite at a node.
template <class F>
double integrate(const QuadratureRule& rule, F&& g) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = g(rule.nodes[i]);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::non_finite_sample,
                  "integrand is not finite at node " + std::to_string(rule.nodes[i]));
    }
    sum += rule.weights[i] * v;
  }
  return sum;
}

}  // namespace gensmooth
