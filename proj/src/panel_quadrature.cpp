#include "gensmooth/panel_quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "gensmooth/error.hpp"
#include "gensmooth/quadrature.hpp"

namespace gensmooth {

namespace {

struct Span {
  double lo;
  double hi;
  bool left_end;
  bool right_end;
};

// Nodes and effective weights of the m-point rule on one panel.
void panel_rule(const Span& s, double gamma, int m, std::vector<double>& xs, std::vector<double>& ws) {
  xs.resize(m);
  ws.resize(m);
  if (s.left_end && s.right_end) {
    const auto& r = cached_gauss_jacobi(m, gamma, gamma);
    std::copy(r.nodes.begin(), r.nodes.end(), xs.begin());
    std::copy(r.weights.begin(), r.weights.end(), ws.begin());
  } else if (s.right_end) {
    const auto& r = cached_gauss_jacobi(m, gamma, 0.0);
    const double half = 0.5 * (1.0 - s.lo);
    const double scale = std::pow(half, gamma + 1.0);
    for (int i = 0; i < m; ++i) {
      const double x = s.lo + half * (r.nodes[i] + 1.0);
      xs[i] = x;
      ws[i] = scale * r.weights[i] * std::pow(1.0 + x, gamma);
    }
  } else if (s.left_end) {
    const auto& r = cached_gauss_jacobi(m, 0.0, gamma);
    const double half = 0.5 * (s.hi + 1.0);
    const double scale = std::pow(half, gamma + 1.0);
    for (int i = 0; i < m; ++i) {
      const double x = -1.0 + half * (r.nodes[i] + 1.0);
      xs[i] = x;
      ws[i] = scale * r.weights[i] * std::pow(1.0 - x, gamma);
    }
  } else {
    const auto& r = cached_gauss_jacobi(m, 0.0, 0.0);
    const double half = 0.5 * (s.hi - s.lo);
    for (int i = 0; i < m; ++i) {
      const double x = s.lo + half * (r.nodes[i] + 1.0);
      xs[i] = x;
      ws[i] = half * r.weights[i] * (gamma == 0.0 ? 1.0 : std::pow((1.0 - x) * (1.0 + x), gamma));
    }
  }
}

std::pair<Span, Span> bisect(const Span& s) {
  const double mid = 0.5 * (s.lo + s.hi);
  return {Span{s.lo, mid, s.left_end, false}, Span{mid, s.hi, false, s.right_end}};
}

std::vector<double> interior_breaks(std::span<const double> breakpoints, bool with_defaults) {
  std::vector<double> pts;
  if (with_defaults) pts = {-0.5, 0.0, 0.5};
  for (double b : breakpoints) {
    if (std::isfinite(b) && b > -1.0 + 1e-12 && b < 1.0 - 1e-12) pts.push_back(b);
  }
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  for (double p : pts) {
    if (out.empty() || p - out.back() > 1e-12) out.push_back(p);
  }
  return out;
}

class Integrator {
 public:
  Integrator(double gamma, std::size_t dim, const VectorIntegrand& g, int order)
      : gamma_(gamma), dim_(dim), g_(g), order_(order), sample_(dim) {}

  std::vector<double> sum(const Span& s) {
    panel_rule(s, gamma_, order_, xs_, ws_);
    std::vector<double> acc(dim_, 0.0);
    for (int i = 0; i < order_; ++i) {
      std::fill(sample_.begin(), sample_.end(), 0.0);
      g_(xs_[i], sample_);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!std::isfinite(sample_[k])) {
          throw Error(ErrorCode::non_finite_sample, "integrand is not finite at x = " + std::to_string(xs_[i]));
        }
        acc[k] += ws_[i] * sample_[k];
      }
    }
    evaluations_ += order_;
    return acc;
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  double gamma_;
  std::size_t dim_;
  const VectorIntegrand& g_;
  int order_;
  std::vector<double> xs_, ws_, sample_;
  std::size_t evaluations_ = 0;
};

struct Panel {
  Span span;
  std::vector<double> coarse;
  std::vector<double> left;
  std::vector<double> right;
  double error = 0.0;
  bool alive = true;
};

double max_abs_diff(const Panel& p) {
  double e = 0.0;
  for (std::size_t k = 0; k < p.coarse.size(); ++k) {
    e = std::max(e, std::abs(p.coarse[k] - (p.left[k] + p.right[k])));
  }
  return e;
}

}  // namespace

PanelResult integrate_weighted(double gamma, std::span<const double> breakpoints, std::size_t dim,
                               const VectorIntegrand& g, const PanelOptions& options) {
  if (!(gamma > -1.0)) throw Error(ErrorCode::invalid_parameter, "weight exponent must exceed -1");
  if (options.order < 1) throw Error(ErrorCode::invalid_order, "panel order must be >= 1");

  Integrator integ(gamma, dim, g, options.order);
  std::vector<Panel> panels;
  panels.reserve(2 * static_cast<std::size_t>(options.max_panels) + 8);

  auto make_panel = [&](const Span& s, std::vector<double> coarse) {
    Panel p;
    p.span = s;
    p.coarse = coarse.empty() ? integ.sum(s) : std::move(coarse);
    auto [l, r] = bisect(s);
    p.left = integ.sum(l);
    p.right = integ.sum(r);
    p.error = max_abs_diff(p);
    panels.push_back(std::move(p));
  };

  const auto cuts = interior_breaks(breakpoints, true);
  double lo = -1.0;
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    const double hi = i < cuts.size() ? cuts[i] : 1.0;
    make_panel(Span{lo, hi, lo == -1.0, hi == 1.0}, {});
    lo = hi;
  }

  // Largest error first; ties resolved toward the leftmost panel.
  auto worse = [&](std::size_t a, std::size_t b) {
    if (panels[a].error != panels[b].error) return panels[a].error < panels[b].error;
    return panels[a].span.lo > panels[b].span.lo;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> queue(worse);
  for (std::size_t i = 0; i < panels.size(); ++i) queue.push(i);

  auto totals = [&](std::vector<double>& value, double& err) {
    value.assign(dim, 0.0);
    err = 0.0;
    for (const auto& p : panels) {
      if (!p.alive) continue;
      for (std::size_t k = 0; k < dim; ++k) value[k] += p.left[k] + p.right[k];
      err += p.error;
    }
  };
  auto tolerance = [&](const std::vector<double>& value) {
    double scale = 0.0;
    for (double v : value) scale = std::max(scale, std::abs(v));
    return std::max(options.abs_tol, options.rel_tol * scale);
  };

  std::vector<double> value;
  double err = 0.0;
  totals(value, err);
  std::size_t leaves = panels.size();
  std::size_t since_refresh = 0;

  while (err > tolerance(value) && !queue.empty() && leaves < static_cast<std::size_t>(options.max_panels)) {
    const std::size_t idx = queue.top();
    queue.pop();
    if (panels[idx].span.hi - panels[idx].span.lo < options.min_width) continue;

    panels[idx].alive = false;
    const Span parent = panels[idx].span;
    std::vector<double> left = panels[idx].left;
    std::vector<double> right = panels[idx].right;
    auto [ls, rs] = bisect(parent);
    for (std::size_t k = 0; k < dim; ++k) value[k] -= panels[idx].left[k] + panels[idx].right[k];
    err -= panels[idx].error;

    make_panel(ls, std::move(left));
    make_panel(rs, std::move(right));
    for (std::size_t j = panels.size() - 2; j < panels.size(); ++j) {
      for (std::size_t k = 0; k < dim; ++k) value[k] += panels[j].left[k] + panels[j].right[k];
      err += panels[j].error;
      queue.push(j);
    }
    ++leaves;
    if (++since_refresh == 64) {
      totals(value, err);
      since_refresh = 0;
    }
  }
  totals(value, err);

  PanelResult result;
  result.converged = err <= tolerance(value);
  result.values = std::move(value);
  result.error_estimate = err;
  result.evaluations = integ.evaluations();
  result.panels = leaves;
  return result;
}

PanelResult integrate_weighted(double gamma, std::span<const double> breakpoints,
                               const std::function<double(double)>& g, const PanelOptions& options) {
  const VectorIntegrand vg = [&](double x, std::span<double> out) { out[0] = g(x); };
  return integrate_weighted(gamma, breakpoints, 1, vg, options);
}

DiscreteMeasure composite_rule(double gamma, std::span<const double> breakpoints, int panels_per_unit,
                               int order) {
  if (order < 1 || panels_per_unit < 1) throw Error(ErrorCode::invalid_order, "composite rule needs positive sizes");
  const auto cuts = interior_breaks(breakpoints, false);
  std::vector<double> edges{-1.0};
  edges.insert(edges.end(), cuts.begin(), cuts.end());
  edges.push_back(1.0);

  DiscreteMeasure m;
  std::vector<double> xs, ws;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i], b = edges[i + 1];
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) * panels_per_unit - 1e-9)));
    for (int j = 0; j < pieces; ++j) {
      const double lo = a + (b - a) * j / pieces;
      const double hi = j + 1 == pieces ? b : a + (b - a) * (j + 1) / pieces;
      panel_rule(Span{lo, hi, lo == -1.0, hi == 1.0}, gamma, order, xs, ws);
      m.nodes.insert(m.nodes.end(), xs.begin(), xs.end());
      m.weights.insert(m.weights.end(), ws.begin(), ws.end());
    }
  }
  return m;
}

}  // namespace gensmooth
