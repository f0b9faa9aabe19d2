#pragma once

/**
 * @file funcspace.hpp
 * @brief The weighted space L_{p,alpha} on [-1, 1].
 *
 * A function f belongs to L_{p,alpha} when f(x) (1 - x^2)^alpha is in L_p,
 * and its norm is ||f||_{p,alpha} = || f(x) (1 - x^2)^alpha ||_p.
 */

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gensmooth/panel_quadrature.hpp"
#include "gensmooth/polynomial.hpp"

namespace gensmooth {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Whether (p, alpha) lies in the admissible region of the Jackson/inverse
/// estimate:
///   p = 1:          1/2 < alpha <= 1
///   1 < p < inf:    1 - 1/(2p) < alpha < 3/2 - 1/(2p)
///   p = inf:        1 <= alpha < 3/2
/// Throws invalid_p for p < 1 (or NaN).
bool validate_params(double p, double alpha);

struct SpaceParams {
  double p = 2.0;  // kInfinity for the sup norm
  double alpha = 1.0;

  /// Checked constructor: p >= 1 (invalid_p) and alpha >= 0 (invalid_parameter).
  static SpaceParams make(double p, double alpha);

  bool is_sup() const noexcept { return p == kInfinity; }
  bool theorem_valid() const { return validate_params(p, alpha); }
};

/// "inf" or a real number >= 1.
double parse_p(std::string_view text);
std::string format_p(double p);

enum class Smoothness { analytic, lipschitz, holder, piecewise };

struct SmoothnessTag {
  Smoothness kind = Smoothness::analytic;
  double exponent = 1.0;  // only meaningful for holder
};

/// A named evaluator on [-1, 1]. `breakpoints` lists interior points where
/// the function (or a low derivative) is not smooth; quadrature splits there.
class TestFunction {
 public:
  using Evaluator = std::function<double(double)>;

  TestFunction() = default;
  TestFunction(std::string id, Evaluator eval, std::vector<double> breakpoints = {},
               std::optional<SmoothnessTag> smoothness = std::nullopt);

  double operator()(double x) const { return eval_(x); }

  const std::string& id() const noexcept { return id_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::optional<SmoothnessTag>& smoothness() const noexcept { return smoothness_; }
  bool has_holder_point() const noexcept {
    return smoothness_ && smoothness_->kind == Smoothness::holder && !breakpoints_.empty();
  }

  /// Marks the function as not evaluable at x = +-1 (sup-norm grids then
  /// stay interior even for alpha = 0).
  TestFunction& interior_only(bool v = true) {
    interior_only_ = v;
    return *this;
  }
  bool is_interior_only() const noexcept { return interior_only_; }

 private:
  std::string id_;
  Evaluator eval_;
  std::vector<double> breakpoints_;
  std::optional<SmoothnessTag> smoothness_;
  bool interior_only_ = false;
};

TestFunction scaled(const TestFunction& f, double c);
TestFunction sum(const TestFunction& f, const TestFunction& g);
TestFunction shifted(const TestFunction& f, double c);
TestFunction minus_polynomial(const TestFunction& f, const Polynomial& p);
TestFunction from_polynomial(const Polynomial& p, std::string id = "poly");

// Registry of built-in test functions. Parametric families take their
// parameter in parentheses: "absx_pow(1.5)", "cheb_k(3)".
std::vector<std::string> registry_list();
TestFunction lookup(std::string_view id);
bool registry_contains(std::string_view id);

struct NormOptions {
  PanelOptions panel{.order = 10, .rel_tol = 1e-10, .abs_tol = 0.0, .max_panels = 4096, .min_width = 1e-10};
  /// Absolute floor on the norm value below which quadrature noise is accepted.
  double abs_tol = 1e-14;
  /// The sup norm samples cos(k pi / sup_intervals), k = 0..sup_intervals.
  int sup_intervals = 2048;
  /// Local maxima within this relative distance of the grid maximum are refined.
  double refine_fraction = 1e-3;
};

struct WeightedNormResult {
  double value = 0.0;
  int grid_size_used = 0;
  bool converged = false;
};

/// ||f||_{p,alpha}. For p < inf the integral of |f|^p (1 - x^2)^{alpha p} is
/// computed adaptively; for p = inf the weighted modulus is maximised over a
/// Chebyshev-extrema grid, then refined by golden section around the leading
/// local maxima.
WeightedNormResult weighted_norm(const TestFunction& f, const SpaceParams& params, const NormOptions& options = {});

}  // namespace gensmooth
