#include "gensmooth/translation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "gensmooth/error.hpp"
#include "gensmooth/quadrature.hpp"

namespace gensmooth {

namespace {

constexpr double kEndpointGuard = 1e-13;
// Geometric grading toward a Holder point of f(B(phi)).
constexpr double kGradingRatio = 0.2;
constexpr int kGradingLevels = 8;

struct PhiTable {
  std::vector<double> weights;
  std::vector<double> cos_phi;
  std::vector<double> sin2_phi;
};

const PhiTable& phi_table(int order) {
  static std::map<int, std::unique_ptr<PhiTable>> cache;
  static std::mutex mutex;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return *it->second;
  }
  const QuadratureRule& rule = cached_phi_rule(order);
  auto table = std::make_unique<PhiTable>();
  table->weights = rule.weights;
  for (double phi : rule.nodes) {
    const double s = std::sin(phi);
    table->cos_phi.push_back(std::cos(phi));
    table->sin2_phi.push_back(s * s);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(order, std::move(table));
  return *it->second;
}

struct Geometry {
  double x, s, ct, st, one_minus_ct;
};

void check_finite(double v, const TestFunction& f, double y) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::non_finite_sample, f.id() + " is not finite at " + std::to_string(y));
  }
}

// Accumulates sum w K (f(B) - fx) and sum w |K| (|f(B)| + |fx|).
struct Accumulator {
  double value = 0.0;
  double scale = 0.0;

  void add(const Geometry& g, const TestFunction& f, double fx, double w, double cphi, double s2phi) {
    const double a = g.s * g.ct + g.x * g.st * cphi + g.s * g.one_minus_ct * s2phi;
    double b = g.x * g.ct - g.s * g.st * cphi;
    assert(std::abs(b) <= 1.0 + 1e-14);
    b = std::clamp(b, -1.0, 1.0);
    const double k = 2.0 * a * a - 1.0 + b * b;
    const double fb = f(b);
    check_finite(fb, f, b);
    value += w * k * (fb - fx);
    scale += w * std::abs(k) * (std::abs(fb) + std::abs(fx));
  }
};

// Interior cut points in (0, pi) where B(phi) crosses a breakpoint of f.
std::vector<double> phi_cuts(const TestFunction& f, const Geometry& g) {
  std::vector<double> cuts;
  if (g.st == 0.0) return cuts;
  for (double b : f.breakpoints()) {
    const double c = (g.x * g.ct - b) / (g.s * g.st);
    if (c > -1.0 && c < 1.0) cuts.push_back(std::acos(c));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

std::vector<std::pair<double, double>> phi_pieces(const std::vector<double>& cuts, bool graded) {
  std::vector<double> edges{0.0};
  edges.insert(edges.end(), cuts.begin(), cuts.end());
  edges.push_back(M_PI);
  std::vector<std::pair<double, double>> pieces;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i], hi = edges[i + 1];
    if (hi <= lo) continue;
    const bool grade_lo = graded && i > 0;
    const bool grade_hi = graded && i + 2 < edges.size();
    if (!grade_lo && !grade_hi) {
      pieces.emplace_back(lo, hi);
      continue;
    }
    // Split at the midpoint when both ends are singular, then grade each half.
    const double mid = grade_lo && grade_hi ? 0.5 * (lo + hi) : (grade_lo ? hi : lo);
    if (grade_lo) {
      const double len = mid - lo;
      double inner = lo;
      double r = std::pow(kGradingRatio, kGradingLevels);
      for (int j = kGradingLevels; j >= 0; --j) {
        const double outer = j == 0 ? mid : lo + len * r;
        pieces.emplace_back(inner, outer);
        inner = outer;
        r /= kGradingRatio;
      }
    }
    if (grade_hi) {
      const double len = hi - mid;
      std::vector<std::pair<double, double>> tail;
      double inner = hi;
      double r = std::pow(kGradingRatio, kGradingLevels);
      for (int j = kGradingLevels; j >= 0; --j) {
        const double outer = j == 0 ? mid : hi - len * r;
        tail.emplace_back(outer, inner);
        inner = outer;
        r /= kGradingRatio;
      }
      pieces.insert(pieces.end(), tail.rbegin(), tail.rend());
    }
  }
  return pieces;
}

Accumulator phi_integral(const TestFunction& f, const Geometry& g, double fx,
                         const std::vector<std::pair<double, double>>& pieces, int order) {
  Accumulator acc;
  if (pieces.size() == 1) {
    const PhiTable& table = phi_table(order);
    for (std::size_t i = 0; i < table.weights.size(); ++i) {
      acc.add(g, f, fx, table.weights[i], table.cos_phi[i], table.sin2_phi[i]);
    }
    return acc;
  }
  const int per_piece = std::max(8, order / static_cast<int>(std::min<std::size_t>(pieces.size(), 8)));
  const QuadratureRule& rule = cached_gauss_jacobi(per_piece, 0.0, 0.0);
  for (const auto& [lo, hi] : pieces) {
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double phi = lo + half * (rule.nodes[i] + 1.0);
      const double sp = std::sin(phi);
      acc.add(g, f, fx, half * rule.weights[i], std::cos(phi), sp * sp);
    }
  }
  return acc;
}

void check_t(double t, const TranslationOptions& options) {
  if (!(options.t_max > 0.0 && options.t_max < M_PI)) {
    throw Error(ErrorCode::invalid_parameter, "t_max must lie in (0, pi)");
  }
  if (!(std::abs(t) <= options.t_max)) {
    throw Error(ErrorCode::invalid_parameter,
                "|t| = " + std::to_string(std::abs(t)) + " exceeds t_max = " + std::to_string(options.t_max));
  }
  if (options.phi_order < 4 || options.max_phi_order < options.phi_order) {
    throw Error(ErrorCode::invalid_order, "phi order must be >= 4 and not exceed its cap");
  }
}

}  // namespace

KernelSample kernel_parts(double x, double t, double phi) {
  if (!(std::abs(x) < 1.0)) throw Error(ErrorCode::domain_error, "kernel requires |x| < 1");
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  const double ct = std::cos(t), st = std::sin(t);
  const double half = std::sin(0.5 * t);
  const double sp = std::sin(phi);
  const double cp = std::cos(phi);
  KernelSample out;
  out.weight_a = s * ct + x * st * cp + s * (2.0 * half * half) * sp * sp;
  const double b = x * ct - s * st * cp;
  assert(std::abs(b) <= 1.0 + 1e-14);
  out.argument_b = std::clamp(b, -1.0, 1.0);
  out.kernel_value = 2.0 * out.weight_a * out.weight_a - 1.0 + out.argument_b * out.argument_b;
  return out;
}

double translation_difference(const TestFunction& f, double t, double x, const TranslationOptions& options) {
  check_t(t, options);
  if (!(std::abs(x) < 1.0)) throw Error(ErrorCode::domain_error, "translation requires |x| < 1");
  const double s2 = (1.0 - x) * (1.0 + x);
  if (s2 < kEndpointGuard) {
    throw Error(ErrorCode::near_endpoint, "1 - x^2 = " + std::to_string(s2) + " is below the endpoint guard");
  }
  if (t == 0.0) return 0.0;

  const double half = std::sin(0.5 * t);
  const Geometry g{x, std::sqrt(s2), std::cos(t), std::sin(t), 2.0 * half * half};
  const double fx = f(x);
  check_finite(fx, f, x);

  const auto pieces = phi_pieces(phi_cuts(f, g), f.has_holder_point());
  const double c2 = std::cos(0.5 * t) * std::cos(0.5 * t);
  const double norm = M_PI * s2 * c2 * c2;

  int order = options.phi_order;
  Accumulator prev = phi_integral(f, g, fx, pieces, order);
  while (true) {
    const int next = order * 2;
    if (next > options.max_phi_order) {
      throw Error(ErrorCode::non_convergence, "phi quadrature did not settle by order " + std::to_string(order) +
                                                  " at x = " + std::to_string(x) + ", t = " + std::to_string(t));
    }
    Accumulator cur = phi_integral(f, g, fx, pieces, next);
    if (std::abs(cur.value - prev.value) <= options.rel_tol * cur.scale) return cur.value / norm;
    prev = cur;
    order = next;
  }
}

double translate(const TestFunction& f, double t, double x, const TranslationOptions& options) {
  const double d = translation_difference(f, t, x, options);
  return f(x) + d;
}

std::vector<double> translate_grid(const TestFunction& f, double t, std::span<const double> xs,
                                   const TranslationOptions& options) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      out[i] = translate(f, t, xs[i], options);
    } catch (const Error& e) {
      throw Error(e.code(), "at index " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

std::vector<double> translation_breakpoints(const TestFunction& f, double t) {
  std::vector<double> pts;
  for (double b : f.breakpoints()) {
    pts.push_back(b);
    if (t == 0.0 || !(std::abs(b) <= 1.0)) continue;
    const double theta = std::acos(b);
    for (double sign : {-1.0, 1.0}) {
      const double angle = theta + sign * t;
      if (angle > 0.0 && angle < M_PI) pts.push_back(std::cos(angle));
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

TestFunction translation_defect(const TestFunction& f, double t, const TranslationOptions& options) {
  check_t(t, options);
  TestFunction out(
      "tau(" + f.id() + ")-" + f.id(), [f, t, options](double x) { return translation_difference(f, t, x, options); },
      translation_breakpoints(f, t), f.smoothness());
  out.interior_only();
  return out;
}

double degree_probe(double t, int max_degree, const TranslationOptions& options) {
  if (max_degree < 0) throw Error(ErrorCode::invalid_order, "max_degree must be >= 0");
  const std::size_t m = 4 * static_cast<std::size_t>(max_degree + 1);
  const auto xs = Polynomial::chebyshev_points(m);
  double worst = 0.0;
  for (int k = 0; k <= max_degree; ++k) {
    std::vector<double> c(k + 1, 0.0);
    c.back() = 1.0;
    const TestFunction tk = from_polynomial(Polynomial(c), "T" + std::to_string(k));
    const auto values = translate_grid(tk, t, xs, options);
    const auto fit = Polynomial::interpolate_chebyshev_points(values);
    double total = 0.0, excess = 0.0;
    for (std::size_t j = 0; j < fit.coeffs().size(); ++j) {
      total = std::max(total, std::abs(fit.coeffs()[j]));
      if (static_cast<int>(j) > k) excess = std::max(excess, std::abs(fit.coeffs()[j]));
    }
    if (total > 0.0) worst = std::max(worst, excess / total);
  }
  return worst;
}

}  // namespace gensmooth
