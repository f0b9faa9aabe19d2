#pragma once

/**
 * @file verifier.hpp
 * @brief Empirical check of the two-sided estimate
 *
 *   C1 E_n(f) <= w(f, 1/n) <= C2 n^{-2} sum_{v=1}^{n} v E_v(f),
 *
 * with w the generalised modulus and E_n the best approximation in
 * L_{p,alpha}. The constants are estimated from the computed table as
 * c1_hat = min_n w/E_n and c2_hat = max_n w/(n^{-2} sum v E_v).
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gensmooth/bestapprox.hpp"
#include "gensmooth/funcspace.hpp"
#include "gensmooth/modulus.hpp"

namespace gensmooth {

inline constexpr double kDegenerateApproxTol = 1e-12;
inline constexpr double kDegenerateDenominatorTol = 1e-14;

struct TheoremRow {
  int n = 0;
  double e_n = 0.0;
  double omega = 0.0;
  double lower_ratio = 0.0;        // omega / E_n
  double upper_denominator = 0.0;  // n^{-2} sum_{v<=n} v E_v
  double upper_ratio = 0.0;        // omega / upper_denominator
  bool degenerate = false;         // E_n below kDegenerateApproxTol
  bool converged = true;
};

struct TheoremReport {
  std::string function_id;
  SpaceParams params;
  int n_max = 0;
  std::vector<TheoremRow> rows;
  double c1_hat = 0.0;
  double c2_hat = 0.0;
  bool degenerate = false;
  bool out_of_hypothesis = false;
  bool converged = true;
  std::optional<double> degree_probe_residual;
};

struct VerifyOptions {
  bool allow_out_of_hypothesis = false;
  bool degree_probe = false;
  unsigned threads = 0;  // 0: worker_count()
  BestApproxOptions best;
  ModulusOptions modulus;
};

/// Builds the row table for n = 1..n_max. Throws invalid_params when (p,
/// alpha) is outside the admissible region unless allow_out_of_hypothesis
/// is set, in which case the report is marked out_of_hypothesis.
TheoremReport verify_theorem(const TestFunction& f, const SpaceParams& params, int n_max,
                             const VerifyOptions& options = {});

/// Fills the ratio columns, c1_hat, c2_hat and the degenerate flag from
/// (n, E_n, omega) triples already present in `report.rows`.
void assemble_report(TheoremReport& report);

struct EmpiricalConstants {
  double c1_hat = 0.0;
  double c2_hat = 0.0;
};

/// Throws degenerate_report when no row qualifies.
EmpiricalConstants empirical_constants(const TheoremReport& report);

struct StabilitySummary {
  double min_c1 = 0.0;
  double max_c2 = 0.0;
  double c1_spread = 0.0;  // max c1_hat - min c1_hat
  double c2_spread = 0.0;
};

/// Across a family of reports for one (p, alpha). Needs >= 2 non-degenerate
/// reports (empty_input otherwise).
StabilitySummary stability_probe(std::span<const TheoremReport> reports);

/// Row table as CSV: '#' comment header, then
/// n,E_n,omega,lower_ratio,upper_denominator,upper_ratio,degenerate.
std::string report_csv(const TheoremReport& report);

/// 17 significant digits; "nan"/"inf" spelled out.
std::string format_real(double v);

}  // namespace gensmooth
