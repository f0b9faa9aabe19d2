#include "gensmooth/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

namespace gensmooth {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_order: return "invalid-order";
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::invalid_p: return "invalid-p";
    case ErrorCode::invalid_params: return "invalid-params";
    case ErrorCode::non_finite_sample: return "non-finite-sample";
    case ErrorCode::non_convergence: return "non-convergence";
    case ErrorCode::domain_error: return "domain-error";
    case ErrorCode::near_endpoint: return "near-endpoint-error";
    case ErrorCode::not_found: return "not-found";
    case ErrorCode::irls_divergence: return "irls-divergence";
    case ErrorCode::exchange_stagnation: return "exchange-stagnation";
    case ErrorCode::degenerate_report: return "degenerate-report";
    case ErrorCode::empty_input: return "empty-input";
  }
  return "unknown";
}

double QuadratureRule::weight_sum() const noexcept {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double jacobi_weight_integral(double a, double b) {
  // 2^{a+b+1} B(a+1, b+1)
  return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
}

JacobiRecurrence jacobi_recurrence(int count, double a, double b) {
  JacobiRecurrence rec;
  rec.mu0 = jacobi_weight_integral(a, b);
  rec.alpha.resize(count);
  rec.beta.resize(count);
  const double ab = a + b;
  for (int k = 0; k < count; ++k) {
    if (k == 0) {
      rec.alpha[k] = (b - a) / (ab + 2.0);
    } else {
      const double s = 2.0 * k + ab;
      rec.alpha[k] = (b * b - a * a) / (s * (s + 2.0));
    }
    const int m = k + 1;  // beta_m
    double beta_sq;
    if (m == 1) {
      beta_sq = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      const double s = 2.0 * m + ab;
      beta_sq = 4.0 * m * (m + a) * (m + b) * (m + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    rec.beta[k] = std::sqrt(beta_sq);
  }
  return rec;
}

void orthonormal_values(const JacobiRecurrence& rec, double x, std::span<double> out) {
  if (out.empty()) return;
  out[0] = 1.0 / std::sqrt(rec.mu0);
  if (out.size() == 1) return;
  out[1] = (x - rec.alpha[0]) * out[0] / rec.beta[0];
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    out[k + 1] = ((x - rec.alpha[k]) * out[k] - rec.beta[k - 1] * out[k - 1]) / rec.beta[k];
  }
}

namespace {

// p_N(x) and p_N'(x) for the orthonormal family, N = rec.alpha.size().
std::pair<double, double> top_value_and_derivative(const JacobiRecurrence& rec, double x) {
  const std::size_t n = rec.alpha.size();
  double p_prev = 0.0, p = 1.0 / std::sqrt(rec.mu0);
  double d_prev = 0.0, d = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double b_prev = k == 0 ? 0.0 : rec.beta[k - 1];
    const double p_next = ((x - rec.alpha[k]) * p - b_prev * p_prev) / rec.beta[k];
    const double d_next = (p + (x - rec.alpha[k]) * d - b_prev * d_prev) / rec.beta[k];
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
  }
  return {p, d};
}

QuadratureRule build_rule(int order, double a, double b) {
  const JacobiRecurrence rec = jacobi_recurrence(order, a, b);

  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(std::max(order - 1, 0));
  for (int i = 0; i < order; ++i) diag[i] = rec.alpha[i];
  for (int i = 0; i + 1 < order; ++i) sub[i] = rec.beta[i];

  std::vector<double> nodes(order);
  if (order == 1) {
    nodes[0] = diag[0];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    for (int i = 0; i < order; ++i) nodes[i] = solver.eigenvalues()[i];
  }

  for (double& x : nodes) {
    for (int it = 0; it < 3; ++it) {
      const auto [p, d] = top_value_and_derivative(rec, x);
      if (d == 0.0) break;
      const double step = p / d;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
  }

  std::vector<double> weights(order);
  std::vector<double> values(order);
  for (int i = 0; i < order; ++i) {
    orthonormal_values(rec, nodes[i], values);
    double s = 0.0;
    for (double v : values) s += v * v;
    weights[i] = 1.0 / s;
  }

  if (a == b) {
    for (int i = 0; i < order / 2; ++i) {
      const int j = order - 1 - i;
      const double x = 0.5 * (nodes[j] - nodes[i]);
      const double w = 0.5 * (weights[i] + weights[j]);
      nodes[i] = -x;
      nodes[j] = x;
      weights[i] = weights[j] = w;
    }
    if (order % 2 == 1) nodes[order / 2] = 0.0;
  }

  QuadratureRule rule;
  rule.nodes = std::move(nodes);
  rule.weights = std::move(weights);
  rule.kind = (a == 0.0 && b == 0.0) ? RuleKind::legendre : RuleKind::jacobi;
  rule.a = a;
  rule.b = b;
  rule.order = order;
  return rule;
}

}  // namespace

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw Error(ErrorCode::invalid_order, "order must be >= 1");
  return build_rule(order, 0.0, 0.0);
}

QuadratureRule gauss_jacobi(int order, double a, double b) {
  if (order < 1) throw Error(ErrorCode::invalid_order, "order must be >= 1");
  if (!(a > -1.0) || !(b > -1.0)) {
    throw Error(ErrorCode::invalid_parameter, "Jacobi exponents must exceed -1");
  }
  return build_rule(order, a, b);
}

QuadratureRule shift_to_phi(const QuadratureRule& rule) {
  QuadratureRule out = rule;
  out.kind = RuleKind::shifted_phi;
  for (double& x : out.nodes) x = 0.5 * M_PI * (x + 1.0);
  for (double& w : out.weights) w *= 0.5 * M_PI;
  return out;
}

namespace {

template <class Key, class Build>
const QuadratureRule& cached(std::map<Key, std::unique_ptr<QuadratureRule>>& cache, std::mutex& mutex,
                             const Key& key, Build&& build) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto rule = std::make_unique<QuadratureRule>(build());
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(rule));
  return *it->second;
}

}  // namespace

const QuadratureRule& cached_gauss_jacobi(int order, double a, double b) {
  static std::map<std::tuple<int, double, double>, std::unique_ptr<QuadratureRule>> cache;
  static std::mutex mutex;
  return cached(cache, mutex, std::make_tuple(order, a, b), [&] { return gauss_jacobi(order, a, b); });
}

const QuadratureRule& cached_phi_rule(int order) {
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  static std::mutex mutex;
  return cached(cache, mutex, order, [&] { return shift_to_phi(gauss_legendre(order)); });
}

}  // namespace gensmooth
