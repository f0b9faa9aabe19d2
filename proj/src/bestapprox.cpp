#include "gensmooth/bestapprox.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gensmooth/error.hpp"
#include "gensmooth/golden_section.hpp"
#include "gensmooth/panel_quadrature.hpp"
#include "gensmooth/quadrature.hpp"

namespace gensmooth {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_n(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_order, "n must be >= 1");
}

double sample(const TestFunction& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) throw Error(ErrorCode::non_finite_sample, f.id() + " is not finite at " + std::to_string(x));
  return v;
}

Eigen::MatrixXd chebyshev_matrix(const std::vector<double>& xs, int n) {
  Eigen::MatrixXd v(static_cast<Eigen::Index>(xs.size()), n);
  std::vector<double> row(n);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    chebyshev_values(xs[i], row);
    for (int k = 0; k < n; ++k) v(static_cast<Eigen::Index>(i), k) = row[k];
  }
  return v;
}

Polynomial to_polynomial(const Eigen::VectorXd& c) { return Polynomial(std::vector<double>(c.data(), c.data() + c.size())); }

}  // namespace

// ---------------------------------------------------------------- p = 2

BestApproxResult best_l2(const TestFunction& f, int n, double alpha, const BestApproxOptions& options) {
  check_n(n);
  if (!(alpha >= 0.0)) throw Error(ErrorCode::invalid_parameter, "alpha must be >= 0");
  const double gamma = 2.0 * alpha;
  const JacobiRecurrence rec = jacobi_recurrence(n, gamma, gamma);

  PanelOptions panel = options.norm.panel;
  panel.order = std::max(panel.order, n + 4);
  panel.rel_tol = options.l2_rel_tol;
  panel.abs_tol = 1e-300;
  const VectorIntegrand integrand = [&](double x, std::span<double> out) {
    orthonormal_values(rec, x, out);
    const double fx = sample(f, x);
    for (double& v : out) v *= fx;
  };
  const PanelResult coeffs = integrate_weighted(gamma, f.breakpoints(), static_cast<std::size_t>(n), integrand, panel);

  // Re-express sum c_k p_k in the Chebyshev basis by interpolation at n points.
  const auto xs = Polynomial::chebyshev_points(n);
  std::vector<double> values(n), basis(n);
  for (int j = 0; j < n; ++j) {
    orthonormal_values(rec, xs[j], basis);
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += coeffs.values[k] * basis[k];
    values[j] = s;
  }

  BestApproxResult out;
  out.poly = Polynomial::interpolate_chebyshev_points(values);
  const auto norm = weighted_norm(minus_polynomial(f, out.poly), SpaceParams{2.0, alpha}, options.norm);
  out.error = norm.value;
  out.discrete_error = norm.value;
  out.iterations = 1;
  out.converged = coeffs.converged && norm.converged;
  return out;
}

// ---------------------------------------------------------------- p = inf

namespace {

// Alternating extrema of e: one point of largest |e| per run of constant sign,
// leftmost on ties.
std::vector<std::size_t> alternating_extrema(const std::vector<double>& e) {
  std::vector<std::size_t> picks;
  int run_sign = 0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    const int s = e[j] > 0.0 ? 1 : (e[j] < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (s != run_sign) {
      picks.push_back(j);
      run_sign = s;
    } else if (std::abs(e[j]) > std::abs(e[picks.back()])) {
      picks.back() = j;
    }
  }
  return picks;
}

// Cuts an alternating set down to `size` points. The smallest interior point
// goes together with its smaller neighbour, which keeps the signs alternating;
// with one point in excess, or a smallest point at an end, an end is dropped.
void trim_reference(std::vector<std::size_t>& picks, const std::vector<double>& e, std::size_t size) {
  const auto mag = [&](std::size_t i) { return std::abs(e[picks[i]]); };
  while (picks.size() > size) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < picks.size(); ++i) {
      if (mag(i) < mag(k)) k = i;
    }
    if (picks.size() - size == 1 || k == 0 || k + 1 == picks.size()) {
      if (mag(0) < mag(picks.size() - 1)) {
        picks.erase(picks.begin());
      } else {
        picks.pop_back();
      }
      continue;
    }
    const std::size_t j = mag(k - 1) < mag(k + 1) ? k - 1 : k + 1;
    picks.erase(picks.begin() + static_cast<std::ptrdiff_t>(std::max(j, k)));
    picks.erase(picks.begin() + static_cast<std::ptrdiff_t>(std::min(j, k)));
  }
}

// Moves each reference point from the grid to the nearby continuous extremum
// of the weighted error and re-levels, a few rounds. Kept only if the
// re-measured sup error drops.
void polish_reference(const TestFunction& f, int n, double alpha, const std::vector<double>& grid,
                      const BestApproxOptions& options, BestApproxResult& out) {
  const auto weight = [&](double x) { return alpha == 0.0 ? 1.0 : std::pow((1.0 - x) * (1.0 + x), alpha); };
  std::vector<double> pts = out.reference;
  std::vector<double> lo(n + 1), hi(n + 1);
  for (int i = 0; i <= n; ++i) {
    const auto it = std::lower_bound(grid.begin(), grid.end(), pts[i]);
    const auto j = static_cast<std::size_t>(it - grid.begin());
    lo[i] = grid[j == 0 ? 0 : j - 1];
    hi[i] = grid[std::min(j + 1, grid.size() - 1)];
  }
  std::vector<double> signs(n + 1);
  for (int i = 0; i <= n; ++i) signs[i] = out.reference_errors[i] >= 0.0 ? 1.0 : -1.0;

  Polynomial poly = out.poly;
  std::vector<double> errs(n + 1);
  std::vector<double> basis(n);
  for (int round = 0; round < 8; ++round) {
    const auto e = [&](double x) { return weight(x) * (sample(f, x) - poly(x)); };
    double lo_abs = kInfinity, hi_abs = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double s = signs[i];
      const auto [x, v] = golden_section_max([&](double x) { return s * e(x); }, lo[i], hi[i],
                                             1e-12 * (hi[i] - lo[i] + 1e-300));
      pts[i] = x;
      errs[i] = s * v;
      lo_abs = std::min(lo_abs, v);
      hi_abs = std::max(hi_abs, v);
    }
    for (int i = 1; i <= n; ++i) {
      if (!(pts[i] > pts[i - 1])) return;
    }
    if (hi_abs - lo_abs <= 1e-12 * hi_abs) break;

    Eigen::MatrixXd a(n + 1, n + 1);
    Eigen::VectorXd rhs(n + 1);
    for (int i = 0; i <= n; ++i) {
      chebyshev_values(pts[i], basis);
      for (int k = 0; k < n; ++k) a(i, k) = basis[k];
      a(i, n) = signs[i] / weight(pts[i]);
      rhs[i] = sample(f, pts[i]);
    }
    const Eigen::VectorXd sol = a.fullPivLu().solve(rhs);
    if (!sol.allFinite()) return;
    poly = to_polynomial(sol.head(n));
  }

  const double err = weighted_norm(minus_polynomial(f, poly), SpaceParams{kInfinity, alpha}, options.norm).value;
  if (err < out.error) {
    out.poly = poly;
    out.error = err;
    out.reference = pts;
    out.reference_errors = errs;
  }
}

// Zeros z of a residual with exactly z.size() sign changes at which
// int w sign(r) T_k = 0 for k < z.size(); these do not depend on f. Newton
// from the IRLS sign changes. Returns false if it fails to settle.
bool l1_sign_points(std::vector<double>& z, double gamma) {
  const auto c = static_cast<int>(z.size());
  const auto weight = [&](double x) { return gamma == 0.0 ? 1.0 : std::pow((1.0 - x) * (1.0 + x), gamma); };
  PanelOptions panel;
  panel.order = std::max(10, c + 2);
  panel.rel_tol = 1e-14;
  panel.abs_tol = 1e-300;
  const auto residual = [&](const std::vector<double>& pts) {
    const VectorIntegrand g = [&](double x, std::span<double> out) {
      const auto crossed = std::lower_bound(pts.begin(), pts.end(), x) - pts.begin();
      chebyshev_values(x, out);
      if (crossed % 2 == 1) {
        for (double& v : out) v = -v;
      }
    };
    const auto r = integrate_weighted(gamma, pts, static_cast<std::size_t>(c), g, panel);
    return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(r.values.data(), c));
  };
  const double scale = jacobi_weight_integral(gamma, gamma);
  Eigen::VectorXd g = residual(z);
  std::vector<double> basis(c);
  for (int iter = 0; iter < 60; ++iter) {
    if (g.cwiseAbs().maxCoeff() <= 1e-14 * scale) return true;
    Eigen::MatrixXd jac(c, c);
    for (int j = 0; j < c; ++j) {
      chebyshev_values(z[j], basis);
      const double left = j % 2 == 0 ? 1.0 : -1.0;
      for (int k = 0; k < c; ++k) jac(k, j) = 2.0 * left * weight(z[j]) * basis[k];
    }
    const Eigen::VectorXd step = jac.fullPivLu().solve(g);
    if (!step.allFinite()) return false;
    double lambda = 1.0;
    bool moved = false;
    for (int halvings = 0; halvings < 30 && !moved; ++halvings, lambda *= 0.5) {
      std::vector<double> trial(z);
      bool ordered = true;
      for (int j = 0; j < c; ++j) {
        trial[j] -= lambda * step[j];
        if (!(trial[j] > (j == 0 ? -1.0 : trial[j - 1])) || !(trial[j] < 1.0)) ordered = false;
      }
      if (!ordered) continue;
      const Eigen::VectorXd gt = residual(trial);
      if (gt.norm() < g.norm()) {
        z = std::move(trial);
        g = gt;
        moved = true;
      }
    }
    if (!moved) return g.cwiseAbs().maxCoeff() <= 1e-10 * scale;
  }
  return g.cwiseAbs().maxCoeff() <= 1e-10 * scale;
}

// Sign changes of f - P on [-1, 1], bracketed on `grid` and bisected.
std::vector<double> residual_zeros(const TestFunction& f, const Polynomial& poly, const std::vector<double>& grid) {
  const auto r = [&](double x) { return sample(f, x) - poly(x); };
  std::vector<double> z;
  double xa = grid.front(), ra = r(xa);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double xb = grid[i], rb = r(xb);
    if (rb == 0.0) continue;
    if (ra != 0.0 && (ra < 0.0) != (rb < 0.0)) {
      double lo = xa, hi = xb;
      const bool neg_lo = ra < 0.0;
      for (int k = 0; k < 200 && hi - lo > 4.0 * kEps * std::max(1.0, std::abs(lo)); ++k) {
        const double mid = 0.5 * (lo + hi);
        const double rm = r(mid);
        if (rm == 0.0) {
          lo = hi = mid;
          break;
        }
        ((rm < 0.0) == neg_lo ? lo : hi) = mid;
      }
      z.push_back(0.5 * (lo + hi));
    }
    xa = xb;
    ra = rb;
  }
  return z;
}

// Newton on the continuous L1 optimality condition int w sign(f - P) T_k = 0,
// k < n, in the Chebyshev coefficients c of P. Returns true once the
// condition holds to rounding level.
bool l1_newton(const TestFunction& f, int n, double gamma, const std::vector<double>& grid, Eigen::VectorXd& c) {
  const auto weight = [&](double x) { return gamma == 0.0 ? 1.0 : std::pow((1.0 - x) * (1.0 + x), gamma); };
  PanelOptions panel;
  panel.order = std::max(10, n + 2);
  panel.rel_tol = 1e-14;
  panel.abs_tol = 1e-300;
  const double scale = jacobi_weight_integral(gamma, gamma);
  const auto gradient = [&](const Polynomial& poly, const std::vector<double>& z) {
    const bool neg_start = sample(f, grid.front()) - poly(grid.front()) < 0.0;
    const VectorIntegrand g = [&](double x, std::span<double> out) {
      const auto crossed = std::lower_bound(z.begin(), z.end(), x) - z.begin();
      chebyshev_values(x, out);
      if ((crossed % 2 == 1) == neg_start) return;
      for (double& v : out) v = -v;
    };
    const auto r = integrate_weighted(gamma, z, static_cast<std::size_t>(n), g, panel);
    return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(r.values.data(), n));
  };

  Polynomial poly = to_polynomial(c);
  std::vector<double> z = residual_zeros(f, poly, grid);
  Eigen::VectorXd g = gradient(poly, z);
  std::vector<double> basis(n);
  for (int iter = 0; iter < 40; ++iter) {
    if (g.cwiseAbs().maxCoeff() <= 1e-12 * scale) return true;
    if (z.size() < static_cast<std::size_t>(n)) return false;
    // d/dc_j of the condition: -2 sum_s w(z_s) T_k(z_s) T_j(z_s) / |r'(z_s)|.
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (double zs : z) {
      const double h = 1e-7 * std::max(1e-3, 1.0 - std::abs(zs));
      const double slope = std::abs((sample(f, zs + h) - poly(zs + h)) - (sample(f, zs - h) - poly(zs - h))) / (2.0 * h);
      if (!(slope > 0.0)) return false;
      chebyshev_values(zs, basis);
      const Eigen::Map<const Eigen::VectorXd> t(basis.data(), n);
      jac -= (2.0 * weight(zs) / slope) * t * t.transpose();
    }
    const Eigen::VectorXd step = jac.ldlt().solve(g);
    if (!step.allFinite()) return false;
    bool moved = false;
    for (double lambda = 1.0; lambda > 1e-4 && !moved; lambda *= 0.5) {
      const Eigen::VectorXd trial = c - lambda * step;
      const Polynomial tp = to_polynomial(trial);
      std::vector<double> tz = residual_zeros(f, tp, grid);
      const Eigen::VectorXd tg = gradient(tp, tz);
      if (tg.norm() < g.norm()) {
        c = trial;
        poly = tp;
        z = std::move(tz);
        g = tg;
        moved = true;
      }
    }
    // Stalled at the rounding level of the quadrature.
    if (!moved) return g.cwiseAbs().maxCoeff() <= 1e-10 * scale;
  }
  return g.cwiseAbs().maxCoeff() <= 1e-10 * scale;
}

}  // namespace

BestApproxResult best_linf(const TestFunction& f, int n, double alpha, const BestApproxOptions& options) {
  check_n(n);
  if (!(alpha >= 0.0)) throw Error(ErrorCode::invalid_parameter, "alpha must be >= 0");

  const int intervals = std::max(options.linf_intervals, 16 * n);
  const bool interior = alpha > 0.0;
  std::vector<double> xs;
  for (int k = intervals; k >= 0; --k) {
    if (interior && (k == 0 || k == intervals)) continue;
    xs.push_back(std::cos(M_PI * k / intervals));
  }
  if (intervals % 2 == 0) xs[xs.size() / 2] = 0.0;
  const std::size_t m = xs.size();
  if (m < static_cast<std::size_t>(n + 1)) throw Error(ErrorCode::invalid_order, "grid too small for n");

  std::vector<double> fs(m), ws(m);
  double scale = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    fs[j] = sample(f, xs[j]);
    ws[j] = alpha == 0.0 ? 1.0 : std::pow((1.0 - xs[j]) * (1.0 + xs[j]), alpha);
    scale = std::max(scale, std::abs(fs[j]) * ws[j]);
  }
  const Eigen::MatrixXd vander = chebyshev_matrix(xs, n);
  const Eigen::Map<const Eigen::VectorXd> fvec(fs.data(), static_cast<Eigen::Index>(m));

  // Initial reference: grid points nearest to the first n + 1 extrema of
  // T_{n+1}. A symmetric set would give a zero levelled error for even f.
  std::vector<std::size_t> ref(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double target = -std::cos(M_PI * i / (n + 1));
    const auto it = std::lower_bound(xs.begin(), xs.end(), target);
    std::size_t j = static_cast<std::size_t>(it - xs.begin());
    if (j == m || (j > 0 && target - xs[j - 1] < xs[j] - target)) j = j == 0 ? 0 : j - 1;
    ref[i] = j;
  }
  for (int i = 1; i <= n; ++i) ref[i] = std::max(ref[i], ref[i - 1] + 1);
  for (int i = n; i-- > 0;) ref[i] = std::min(ref[i], ref[i + 1] - 1);

  BestApproxResult out;
  out.poly = Polynomial::zero(n - 1);
  double best_max = kInfinity;
  std::vector<double> e(m);

  for (int iter = 1; iter <= options.max_exchange_iterations; ++iter) {
    out.iterations = iter;
    Eigen::MatrixXd a(n + 1, n + 1);
    Eigen::VectorXd rhs(n + 1);
    for (int i = 0; i <= n; ++i) {
      const auto j = static_cast<Eigen::Index>(ref[i]);
      a.row(i).head(n) = vander.row(j);
      a(i, n) = (i % 2 == 0 ? 1.0 : -1.0) / ws[ref[i]];
      rhs[i] = fs[ref[i]];
    }
    const Eigen::VectorXd sol = a.fullPivLu().solve(rhs);
    const Eigen::VectorXd c = sol.head(n);
    const Eigen::VectorXd resid = fvec - vander * c;

    double max_abs = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      e[j] = ws[j] * resid[static_cast<Eigen::Index>(j)];
      max_abs = std::max(max_abs, std::abs(e[j]));
    }
    if (max_abs < best_max) {
      best_max = max_abs;
      out.poly = to_polynomial(c);
    }

    if (max_abs <= 1e-15 * scale || max_abs == 0.0) {
      out.converged = true;
      out.reference.clear();
      out.reference_errors.clear();
      for (auto j : ref) {
        out.reference.push_back(xs[j]);
        out.reference_errors.push_back(e[j]);
      }
      break;
    }

    auto next = alternating_extrema(e);
    trim_reference(next, e, static_cast<std::size_t>(n + 1));
    if (next.size() < static_cast<std::size_t>(n + 1)) break;  // cannot form an alternating set

    double lo = kInfinity, hi = 0.0;
    for (auto j : next) {
      lo = std::min(lo, std::abs(e[j]));
      hi = std::max(hi, std::abs(e[j]));
    }
    const bool same = next == ref;
    ref = std::move(next);
    out.reference.clear();
    out.reference_errors.clear();
    for (auto j : ref) {
      out.reference.push_back(xs[j]);
      out.reference_errors.push_back(e[j]);
    }
    if (hi - lo <= options.level_tol * hi + 64.0 * kEps * scale && hi >= max_abs) {
      out.converged = true;
      out.poly = to_polynomial(c);
      best_max = max_abs;
      break;
    }
    if (same) break;
  }

  out.discrete_error = best_max;
  out.error = weighted_norm(minus_polynomial(f, out.poly), SpaceParams{kInfinity, alpha}, options.norm).value;
  if (out.converged && out.reference.size() == static_cast<std::size_t>(n + 1)) polish_reference(f, n, alpha, xs, options, out);
  return out;
}

// ---------------------------------------------------------------- 1 <= p < inf

BestApproxResult best_lp(const TestFunction& f, int n, const SpaceParams& params, const BestApproxOptions& options) {
  check_n(n);
  const double p = params.p;
  if (!(p >= 1.0) || p == kInfinity) throw Error(ErrorCode::invalid_p, "best_lp needs 1 <= p < inf");
  if (!(params.alpha >= 0.0)) throw Error(ErrorCode::invalid_parameter, "alpha must be >= 0");

  const double gamma = params.alpha * p;
  const DiscreteMeasure measure =
      composite_rule(gamma, f.breakpoints(), options.lp_panels_per_unit, std::max(16, n + 4));
  const auto m = static_cast<Eigen::Index>(measure.nodes.size());
  const Eigen::MatrixXd vander = chebyshev_matrix(measure.nodes, n);
  Eigen::VectorXd fvec(m);
  for (Eigen::Index i = 0; i < m; ++i) fvec[i] = sample(f, measure.nodes[i]);
  const Eigen::Map<const Eigen::VectorXd> base(measure.weights.data(), m);

  const auto solve = [&](const Eigen::VectorXd& w) -> Eigen::VectorXd {
    const Eigen::VectorXd sw = w.cwiseSqrt();
    const Eigen::MatrixXd a = sw.asDiagonal() * vander;
    const Eigen::VectorXd b = sw.cwiseProduct(fvec);
    return a.colPivHouseholderQr().solve(b);
  };
  const auto objective = [&](const Eigen::VectorXd& c) {
    const Eigen::VectorXd r = (fvec - vander * c).cwiseAbs();
    double s = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) s += base[i] * (p == 2.0 ? r[i] * r[i] : std::pow(r[i], p));
    return s;
  };

  Eigen::VectorXd c = solve(base);
  double obj = objective(c);
  BestApproxResult out;
  out.iterations = 1;
  out.converged = true;

  if (p > 2.0 && obj > 0.0) {
    // Damped Newton-type reweighting.
    out.converged = false;
    const double step = 1.0 / (p - 1.0);
    for (int iter = 1; iter <= options.irls_max_iterations; ++iter) {
      out.iterations = iter;
      const Eigen::VectorXd r = (fvec - vander * c).cwiseAbs();
      Eigen::VectorXd w(m);
      for (Eigen::Index i = 0; i < m; ++i) w[i] = base[i] * std::pow(std::max(r[i], options.irls_floor), p - 2.0);
      const Eigen::VectorXd target = solve(w);
      if (!target.allFinite()) throw Error(ErrorCode::irls_divergence, "weighted least squares produced non-finite coefficients");

      double lambda = step;
      Eigen::VectorXd trial = c + lambda * (target - c);
      double trial_obj = objective(trial);
      for (int halvings = 0; trial_obj > obj && halvings < 40; ++halvings) {
        lambda *= 0.5;
        trial = c + lambda * (target - c);
        trial_obj = objective(trial);
      }
      if (!std::isfinite(trial_obj)) throw Error(ErrorCode::irls_divergence, "objective is not finite");
      if (trial_obj > obj) {  // no descent direction left
        out.converged = true;
        break;
      }
      const double change = obj - trial_obj;
      c = trial;
      obj = trial_obj;
      if (change <= options.irls_tol * obj || obj == 0.0) {
        out.converged = true;
        break;
      }
    }
  } else if (p < 2.0 && obj > 0.0) {
    // Majorise-minimise on sum w (r^2 + eps^2)^{p/2}, shrinking eps by 10
    // whenever a stage stalls.
    out.converged = false;
    const double rmax = (fvec - vander * c).cwiseAbs().maxCoeff();
    const double eps_min = options.irls_floor * std::max(rmax, 1e-300);
    double eps = std::max(rmax, eps_min);
    const auto smoothed = [&](const Eigen::VectorXd& cc) {
      const Eigen::VectorXd r = fvec - vander * cc;
      double s = 0.0;
      for (Eigen::Index i = 0; i < m; ++i) s += base[i] * std::pow(r[i] * r[i] + eps * eps, 0.5 * p);
      return s;
    };
    double sm = smoothed(c);
    for (int iter = 1; iter <= options.irls_max_iterations; ++iter) {
      out.iterations = iter;
      const Eigen::VectorXd r = fvec - vander * c;
      Eigen::VectorXd w(m);
      for (Eigen::Index i = 0; i < m; ++i) w[i] = base[i] * std::pow(r[i] * r[i] + eps * eps, 0.5 * p - 1.0);
      const Eigen::VectorXd next = solve(w);
      if (!next.allFinite()) throw Error(ErrorCode::irls_divergence, "weighted least squares produced non-finite coefficients");
      const double next_sm = smoothed(next);
      if (!std::isfinite(next_sm)) throw Error(ErrorCode::irls_divergence, "objective is not finite");
      const double change = sm - next_sm;
      if (next_sm <= sm) {
        c = next;
        sm = next_sm;
      }
      if (change <= 1e-3 * sm || next_sm > sm) {
        if (eps <= eps_min) {
          const double true_obj = objective(c);
          if (std::abs(obj - true_obj) <= options.irls_tol * true_obj || true_obj == 0.0) {
            obj = std::min(obj, true_obj);
            out.converged = true;
            break;
          }
        }
        obj = std::min(obj, objective(c));
        eps = std::max(0.1 * eps, eps_min);
        sm = smoothed(c);
      }
    }
    obj = objective(c);
    if (p == 1.0) {
      // A discrete L1 minimiser interpolates f at n nodes; try the n nodes
      // with the smallest residuals.
      const Eigen::VectorXd r = (fvec - vander * c).cwiseAbs();
      std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
      for (Eigen::Index i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
      std::partial_sort(order.begin(), order.begin() + n, order.end(),
                        [&](Eigen::Index x, Eigen::Index y) { return r[x] < r[y]; });
      Eigen::MatrixXd a(n, n);
      Eigen::VectorXd rhs(n);
      for (int k = 0; k < n; ++k) {
        a.row(k) = vander.row(order[k]);
        rhs[k] = fvec[order[k]];
      }
      const Eigen::VectorXd vertex = a.fullPivLu().solve(rhs);
      if (vertex.allFinite()) {
        const double vertex_obj = objective(vertex);
        if (vertex_obj < obj) {
          c = vertex;
          obj = vertex_obj;
        }
      }
    }
  }

  out.poly = to_polynomial(c);
  out.discrete_error = std::pow(obj, 1.0 / p);
  const auto norm = weighted_norm(minus_polynomial(f, out.poly), params, options.norm);
  out.error = norm.value;
  out.converged = out.converged && norm.converged;

  if (p == 1.0) {
    // Continuous L1 step: interpolate f at the sign points matching the
    // residual's sign-change count (degree lowered if there are fewer than n).
    const Eigen::VectorXd r = fvec - vander * c;
    std::vector<double> z;
    for (Eigen::Index i = 1; i < m; ++i) {
      if ((r[i - 1] < 0.0) != (r[i] < 0.0)) {
        const double a = std::abs(r[i - 1]), b = std::abs(r[i]);
        const double xa = measure.nodes[i - 1], xb = measure.nodes[i];
        z.push_back(a + b > 0.0 ? xa + (xb - xa) * a / (a + b) : 0.5 * (xa + xb));
      }
    }
    // For symmetric f the count can be n + 1 with a vanishing top coefficient.
    if (!z.empty() && z.size() <= static_cast<std::size_t>(n) + 1 && l1_sign_points(z, gamma)) {
      const auto cz = static_cast<int>(z.size());
      Eigen::MatrixXd a(cz, cz);
      Eigen::VectorXd rhs(cz);
      std::vector<double> basis(cz);
      for (int j = 0; j < cz; ++j) {
        chebyshev_values(z[j], basis);
        for (int k = 0; k < cz; ++k) a(j, k) = basis[k];
        rhs[j] = sample(f, z[j]);
      }
      const Eigen::VectorXd coeffs = a.fullPivLu().solve(rhs);
      const bool fits = cz <= n || std::abs(coeffs[cz - 1]) <= 1e-12 * coeffs.cwiseAbs().maxCoeff();
      if (coeffs.allFinite() && fits) {
        Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
        full.head(std::min(cz, n)) = coeffs.head(std::min(cz, n));
        const Polynomial candidate = to_polynomial(full);
        const auto cand_norm = weighted_norm(minus_polynomial(f, candidate), params, options.norm);
        if (cand_norm.value < out.error) {
          out.poly = candidate;
          out.error = cand_norm.value;
          out.converged = cand_norm.converged;
          c = full;
        }
      }
    }
    // The discrete minimiser is off by the quadrature error of |r| at its
    // kinks; finish on the continuous condition.
    if (Eigen::VectorXd refined = c; l1_newton(f, n, gamma, measure.nodes, refined)) {
      const Polynomial candidate = to_polynomial(refined);
      const auto cand_norm = weighted_norm(minus_polynomial(f, candidate), params, options.norm);
      if (cand_norm.value <= out.error * (1.0 + 1e-12)) {
        out.poly = candidate;
        out.error = cand_norm.value;
        out.converged = cand_norm.converged;
      }
    }
  }
  return out;
}

BestApproxResult best_approx(const TestFunction& f, int n, const SpaceParams& params, const BestApproxOptions& options) {
  check_n(n);
  BestApproxResult out;
  if (params.p == 2.0) {
    out = best_l2(f, n, params.alpha, options);
  } else if (params.is_sup()) {
    out = best_linf(f, n, params.alpha, options);
  } else {
    out = best_lp(f, n, params, options);
  }
  const double baseline = weighted_norm(f, params, options.norm).value;
  if (out.error > baseline) {
    out.poly = Polynomial::zero(n - 1);
    out.error = baseline;
  }
  return out;
}

}  // namespace gensmooth
