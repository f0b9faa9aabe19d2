#include "gensmooth/funcspace.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "gensmooth/error.hpp"
#include "gensmooth/golden_section.hpp"
#include "gensmooth/quadrature.hpp"

namespace gensmooth {

bool validate_params(double p, double alpha) {
  if (!(p >= 1.0)) throw Error(ErrorCode::invalid_p, "p must be >= 1, got " + std::to_string(p));
  if (p == 1.0) return 0.5 < alpha && alpha <= 1.0;
  if (p == kInfinity) return 1.0 <= alpha && alpha < 1.5;
  return 1.0 - 1.0 / (2.0 * p) < alpha && alpha < 1.5 - 1.0 / (2.0 * p);
}

SpaceParams SpaceParams::make(double p, double alpha) {
  if (!(p >= 1.0)) throw Error(ErrorCode::invalid_p, "p must be >= 1");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw Error(ErrorCode::invalid_parameter, "alpha must be >= 0");
  return SpaceParams{p, alpha};
}

double parse_p(std::string_view text) {
  if (text == "inf" || text == "Inf" || text == "INF") return kInfinity;
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw Error(ErrorCode::invalid_p, "cannot parse p from '" + std::string(text) + "'");
  if (!(v >= 1.0) || std::isinf(v)) throw Error(ErrorCode::invalid_p, "p must be >= 1 (or 'inf')");
  return v;
}

std::string format_p(double p) {
  if (p == kInfinity) return "inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p);
  return std::string(buf, ptr);
}

TestFunction::TestFunction(std::string id, Evaluator eval, std::vector<double> breakpoints,
                           std::optional<SmoothnessTag> smoothness)
    : id_(std::move(id)), eval_(std::move(eval)), breakpoints_(std::move(breakpoints)), smoothness_(smoothness) {
  std::sort(breakpoints_.begin(), breakpoints_.end());
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());
}

namespace {

std::vector<double> merged(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::optional<SmoothnessTag> weaker(const std::optional<SmoothnessTag>& a, const std::optional<SmoothnessTag>& b) {
  if (!a) return b;
  if (!b) return a;
  if (a->kind == Smoothness::holder) return a;
  if (b->kind == Smoothness::holder) return b;
  return static_cast<int>(a->kind) >= static_cast<int>(b->kind) ? a : b;
}

}  // namespace

TestFunction scaled(const TestFunction& f, double c) {
  TestFunction out(std::to_string(c) + "*" + f.id(), [f, c](double x) { return c * f(x); }, f.breakpoints(),
                   f.smoothness());
  out.interior_only(f.is_interior_only());
  return out;
}

TestFunction sum(const TestFunction& f, const TestFunction& g) {
  TestFunction out(f.id() + "+" + g.id(), [f, g](double x) { return f(x) + g(x); },
                   merged(f.breakpoints(), g.breakpoints()), weaker(f.smoothness(), g.smoothness()));
  out.interior_only(f.is_interior_only() || g.is_interior_only());
  return out;
}

TestFunction shifted(const TestFunction& f, double c) {
  TestFunction out(f.id() + "+" + std::to_string(c), [f, c](double x) { return f(x) + c; }, f.breakpoints(),
                   f.smoothness());
  out.interior_only(f.is_interior_only());
  return out;
}

TestFunction minus_polynomial(const TestFunction& f, const Polynomial& p) {
  TestFunction out(f.id() + "-P", [f, p](double x) { return f(x) - p(x); }, f.breakpoints(), f.smoothness());
  out.interior_only(f.is_interior_only());
  return out;
}

TestFunction from_polynomial(const Polynomial& p, std::string id) {
  return TestFunction(std::move(id), [p](double x) { return p(x); }, {}, SmoothnessTag{Smoothness::analytic});
}

namespace {

WeightedNormResult integral_norm(const TestFunction& f, double p, double alpha, const NormOptions& options) {
  const double gamma = alpha * p;
  PanelOptions panel = options.panel;
  panel.abs_tol = std::max(panel.abs_tol, std::pow(options.abs_tol, p) * jacobi_weight_integral(gamma, gamma));

  const bool square = p == 2.0;
  const auto integrand = [&](double x) {
    const double v = f(x);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::non_finite_sample, f.id() + " is not finite at x = " + std::to_string(x));
    }
    return square ? v * v : std::pow(std::abs(v), p);
  };
  const PanelResult r = integrate_weighted(gamma, f.breakpoints(), integrand, panel);

  WeightedNormResult out;
  out.value = std::pow(std::max(r.values[0], 0.0), 1.0 / p);
  out.grid_size_used = static_cast<int>(r.evaluations);
  out.converged = r.converged;
  return out;
}

WeightedNormResult sup_norm(const TestFunction& f, double alpha, const NormOptions& options) {
  const int n = options.sup_intervals;
  const bool interior = alpha > 0.0 || f.is_interior_only();
  const auto weight = [alpha](double x) { return alpha == 0.0 ? 1.0 : std::pow((1.0 - x) * (1.0 + x), alpha); };
  const auto h = [&](double x) {
    const double v = f(x);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::non_finite_sample, f.id() + " is not finite at x = " + std::to_string(x));
    }
    return std::abs(v) * weight(x);
  };

  std::vector<double> xs;
  xs.reserve(n + 1);
  for (int k = n; k >= 0; --k) {
    if (interior && (k == 0 || k == n)) continue;
    xs.push_back(std::cos(M_PI * k / n));
  }
  if (n % 2 == 0) xs[xs.size() / 2] = 0.0;  // cos(pi/2) rounding

  std::vector<double> hs(xs.size());
  double grid_max = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    hs[i] = h(xs[i]);
    grid_max = std::max(grid_max, hs[i]);
  }

  double best = grid_max;
  int evaluations = static_cast<int>(xs.size());
  if (grid_max > 0.0) {
    const double threshold = (1.0 - options.refine_fraction) * grid_max;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const bool left_ok = i == 0 || hs[i] >= hs[i - 1];
      const bool right_ok = i + 1 == xs.size() || hs[i] >= hs[i + 1];
      if (!(left_ok && right_ok && hs[i] >= threshold)) continue;
      const double lo = i == 0 ? xs[i] : xs[i - 1];
      const double hi = i + 1 == xs.size() ? xs[i] : xs[i + 1];
      if (hi <= lo) continue;
      int calls = 0;
      const auto counted = [&](double x) {
        ++calls;
        return h(x);
      };
      const auto [x_best, h_best] = golden_section_max(counted, lo, hi, 1e-13 * std::max(1.0, hi - lo), 80);
      (void)x_best;
      evaluations += calls;
      best = std::max(best, h_best);
    }
  }

  WeightedNormResult out;
  out.value = best;
  out.grid_size_used = evaluations;
  out.converged = true;
  return out;
}

}  // namespace

WeightedNormResult weighted_norm(const TestFunction& f, const SpaceParams& params, const NormOptions& options) {
  if (!(params.p >= 1.0)) throw Error(ErrorCode::invalid_p, "p must be >= 1");
  if (!(params.alpha >= 0.0)) throw Error(ErrorCode::invalid_parameter, "alpha must be >= 0");
  if (params.is_sup()) return sup_norm(f, params.alpha, options);
  return integral_norm(f, params.p, params.alpha, options);
}

}  // namespace gensmooth
