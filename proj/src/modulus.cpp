#include "gensmooth/modulus.hpp"

#include <cmath>
#include <string>

#include "gensmooth/error.hpp"
#include "gensmooth/golden_section.hpp"
#include "gensmooth/parallel.hpp"

namespace gensmooth {

WeightedNormResult translation_defect_norm(const TestFunction& f, double t, const SpaceParams& params,
                                           const ModulusOptions& options) {
  if (t == 0.0) return WeightedNormResult{0.0, 0, true};
  try {
    return weighted_norm(translation_defect(f, t, options.translation), params, options.norm);
  } catch (const Error& e) {
    throw Error(e.code(), std::string(e.what()) + " [t = " + std::to_string(t) + "]");
  }
}

ModulusResult modulus(const TestFunction& f, double delta, const SpaceParams& params, const ModulusOptions& options) {
  if (!(delta >= 0.0) || delta > options.translation.t_max) {
    throw Error(ErrorCode::invalid_parameter, "delta must lie in [0, t_max]");
  }
  if (options.t_grid < 3 || options.t_grid % 2 == 0) {
    throw Error(ErrorCode::invalid_parameter, "t_grid must be odd and >= 3");
  }
  ModulusResult out;
  out.t_grid_size = options.t_grid;
  if (delta == 0.0) return out;

  const int count = options.t_grid;
  const int half = count / 2;
  std::vector<double> ts(count);
  for (int i = 0; i < count; ++i) ts[i] = i == half ? 0.0 : delta * (i - half) / half;
  ts.front() = -delta;
  ts.back() = delta;

  std::vector<WeightedNormResult> values(count);
  parallel_for(static_cast<std::size_t>(count),
               [&](std::size_t i) { values[i] = translation_defect_norm(f, ts[i], params, options); });

  int best = 0;
  for (int i = 0; i < count; ++i) {
    out.converged = out.converged && values[i].converged;
    if (values[i].value > values[best].value) best = i;
  }
  out.value = values[best].value;
  out.argmax_t = ts[best];

  if (options.refine && out.value > 0.0) {
    const double lo = ts[std::max(best - 1, 0)];
    const double hi = ts[std::min(best + 1, count - 1)];
    bool converged = true;
    const auto h = [&](double t) {
      // Grid points are already known exactly.
      if (t == lo) return values[std::max(best - 1, 0)].value;
      if (t == hi) return values[std::min(best + 1, count - 1)].value;
      const auto r = translation_defect_norm(f, t, params, options);
      converged = converged && r.converged;
      return r.value;
    };
    const auto [t_star, v_star] = golden_section_max(h, lo, hi, options.refine_width * delta);
    out.refined = true;
    out.converged = out.converged && converged;
    if (v_star > out.value) {
      out.value = v_star;
      out.argmax_t = t_star;
    }
  }
  return out;
}

std::vector<ModulusResult> modulus_curve(const TestFunction& f, std::span<const double> deltas,
                                         const SpaceParams& params, const ModulusOptions& options) {
  for (std::size_t i = 1; i < deltas.size(); ++i) {
    if (deltas[i] < deltas[i - 1]) throw Error(ErrorCode::invalid_parameter, "deltas must be nondecreasing");
  }
  std::vector<ModulusResult> out;
  out.reserve(deltas.size());
  for (double d : deltas) {
    ModulusResult r = modulus(f, d, params, options);
    if (!out.empty() && out.back().value > r.value) {
      r.value = out.back().value;
      r.argmax_t = out.back().argmax_t;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace gensmooth
