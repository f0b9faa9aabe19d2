#include "gensmooth/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gensmooth/error.hpp"
#include "gensmooth/parallel.hpp"
#include "gensmooth/translation.hpp"

namespace gensmooth {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void assemble_report(TheoremReport& report) {
  double partial = 0.0;
  report.c1_hat = kInfinity;
  report.c2_hat = -kInfinity;
  bool any_lower = false, any_upper = false;
  report.degenerate = true;
  for (auto& row : report.rows) {
    partial += row.n * row.e_n;
    row.upper_denominator = partial / (static_cast<double>(row.n) * row.n);
    row.degenerate = row.e_n < kDegenerateApproxTol;
    row.lower_ratio = row.degenerate ? kNaN : row.omega / row.e_n;
    row.upper_ratio = row.upper_denominator < kDegenerateDenominatorTol ? kNaN : row.omega / row.upper_denominator;
    if (!row.degenerate) {
      report.degenerate = false;
      report.c1_hat = std::min(report.c1_hat, row.lower_ratio);
      any_lower = true;
    }
    if (!std::isnan(row.upper_ratio)) {
      report.c2_hat = std::max(report.c2_hat, row.upper_ratio);
      any_upper = true;
    }
  }
  if (!any_lower) report.c1_hat = kNaN;
  if (!any_upper) report.c2_hat = kNaN;
}

TheoremReport verify_theorem(const TestFunction& f, const SpaceParams& params, int n_max,
                             const VerifyOptions& options) {
  if (n_max < 2) throw Error(ErrorCode::invalid_order, "n_max must be >= 2");
  const bool valid = params.theorem_valid();
  if (!valid && !options.allow_out_of_hypothesis) {
    throw Error(ErrorCode::invalid_params, "(p, alpha) = (" + format_p(params.p) + ", " + format_real(params.alpha) +
                                               ") is outside the admissible region");
  }
  if (1.0 > options.modulus.translation.t_max) {
    throw Error(ErrorCode::invalid_parameter, "t_max must be >= 1 to evaluate the modulus at delta = 1");
  }

  TheoremReport report;
  report.function_id = f.id();
  report.params = params;
  report.n_max = n_max;
  report.out_of_hypothesis = !valid;

  // Tasks 0..n_max-1: E_{n}; tasks n_max..2 n_max-1: omega(f, 1/n).
  std::vector<BestApproxResult> approx(n_max);
  std::vector<ModulusResult> moduli(n_max);
  parallel_for(
      2 * static_cast<std::size_t>(n_max),
      [&](std::size_t task) {
        const int n = static_cast<int>(task % n_max) + 1;
        if (task < static_cast<std::size_t>(n_max)) {
          approx[n - 1] = best_approx(f, n, params, options.best);
        } else {
          moduli[n - 1] = modulus(f, 1.0 / n, params, options.modulus);
        }
      },
      options.threads);

  // A degree <= n-2 polynomial is admissible for E_n, so carry the better
  // of the two forward; keeps E_n nonincreasing despite solver noise.
  double running = kInfinity;
  for (int n = 1; n <= n_max; ++n) {
    TheoremRow row;
    row.n = n;
    running = std::min(running, approx[n - 1].error);
    row.e_n = running;
    row.omega = moduli[n - 1].value;
    row.converged = approx[n - 1].converged && moduli[n - 1].converged;
    report.converged = report.converged && row.converged;
    report.rows.push_back(row);
  }
  assemble_report(report);

  if (options.degree_probe) report.degree_probe_residual = degree_probe(0.5, 8, options.modulus.translation);
  return report;
}

EmpiricalConstants empirical_constants(const TheoremReport& report) {
  EmpiricalConstants c{kInfinity, -kInfinity};
  bool lower = false, upper = false;
  for (const auto& row : report.rows) {
    if (row.degenerate) continue;
    if (!std::isnan(row.lower_ratio)) {
      c.c1_hat = std::min(c.c1_hat, row.lower_ratio);
      lower = true;
    }
    if (!std::isnan(row.upper_ratio)) {
      c.c2_hat = std::max(c.c2_hat, row.upper_ratio);
      upper = true;
    }
  }
  if (report.degenerate || !lower || !upper) {
    throw Error(ErrorCode::degenerate_report, "report for " + report.function_id + " has no usable rows");
  }
  return c;
}

StabilitySummary stability_probe(std::span<const TheoremReport> reports) {
  std::vector<EmpiricalConstants> constants;
  for (const auto& r : reports) {
    try {
      constants.push_back(empirical_constants(r));
    } catch (const Error&) {
    }
  }
  if (constants.size() < 2) throw Error(ErrorCode::empty_input, "stability probe needs two non-degenerate reports");
  StabilitySummary s;
  double max_c1 = -kInfinity, min_c2 = kInfinity;
  s.min_c1 = kInfinity;
  s.max_c2 = -kInfinity;
  for (const auto& c : constants) {
    s.min_c1 = std::min(s.min_c1, c.c1_hat);
    max_c1 = std::max(max_c1, c.c1_hat);
    s.max_c2 = std::max(s.max_c2, c.c2_hat);
    min_c2 = std::min(min_c2, c.c2_hat);
  }
  s.c1_spread = max_c1 - s.min_c1;
  s.c2_spread = s.max_c2 - min_c2;
  return s;
}

std::string report_csv(const TheoremReport& report) {
  std::ostringstream out;
  out << "# gensmooth verify\n";
  out << "# version: " << GENSMOOTH_VERSION << "\n";
  out << "# function: " << report.function_id << "\n";
  out << "# p: " << format_p(report.params.p) << "\n";
  out << "# alpha: " << format_real(report.params.alpha) << "\n";
  out << "# n_max: " << report.n_max << "\n";
  out << "# out_of_hypothesis: " << (report.out_of_hypothesis ? "true" : "false") << "\n";
  out << "# c1_hat: " << format_real(report.c1_hat) << "\n";
  out << "# c2_hat: " << format_real(report.c2_hat) << "\n";
  out << "# degenerate: " << (report.degenerate ? "true" : "false") << "\n";
  out << "# converged: " << (report.converged ? "true" : "false") << "\n";
  if (report.degree_probe_residual) out << "# degree_probe_residual: " << format_real(*report.degree_probe_residual) << "\n";
  out << "n,E_n,omega,lower_ratio,upper_denominator,upper_ratio,degenerate\n";
  for (const auto& row : report.rows) {
    out << row.n << ',' << format_real(row.e_n) << ',' << format_real(row.omega) << ',' << format_real(row.lower_ratio)
        << ',' << format_real(row.upper_denominator) << ',' << format_real(row.upper_ratio) << ','
        << (row.degenerate ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace gensmooth
