#include "cli.hpp"

#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gensmooth/bestapprox.hpp"
#include "gensmooth/error.hpp"
#include "gensmooth/funcspace.hpp"
#include "gensmooth/modulus.hpp"
#include "gensmooth/parallel.hpp"
#include "gensmooth/translation.hpp"
#include "gensmooth/verifier.hpp"

namespace gensmooth::cli {

namespace {

constexpr double kMaxTMax = M_PI - 0.1;

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Splits on commas that are not inside parentheses, so "absx_pow(1.5)" survives.
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

double parse_p_flag(const std::string& text) {
  try {
    return parse_p(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--p: ") + e.what());
  }
}

void check_function(const std::string& id, const std::string& flag) {
  if (!registry_contains(id)) throw UsageError(flag + ": unknown function '" + id + "'");
}

TranslationOptions translation_options(const RunConfig& c) {
  TranslationOptions t;
  if (c.t_max_override) t.t_max = *c.t_max_override;
  return t;
}

ModulusOptions modulus_options(const RunConfig& c) {
  ModulusOptions m;
  m.t_grid = c.t_grid;
  m.translation = translation_options(c);
  return m;
}

void require_hypothesis(const SpaceParams& params, bool allow) {
  if (!allow && !params.theorem_valid()) {
    throw Error(ErrorCode::invalid_params, "(p, alpha) = (" + format_p(params.p) + ", " + format_real(params.alpha) +
                                               ") violates the theorem hypotheses; pass --allow-out-of-hypothesis");
  }
}

struct Output {
  std::string body;
  bool converged = true;
};

Output run_translate(const RunConfig& c) {
  const TestFunction f = lookup(c.function_id);
  std::vector<double> xs = c.xs;
  if (xs.empty()) {
    for (int i = 0; i <= 20; ++i) xs.push_back(-0.95 + 0.095 * i);
  }
  const auto values = translate_grid(f, c.t, xs, translation_options(c));
  std::ostringstream out;
  out << "x,t,f,tau\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << format_real(xs[i]) << ',' << format_real(c.t) << ',' << format_real(f(xs[i])) << ','
        << format_real(values[i]) << '\n';
  }
  return {out.str(), true};
}

Output run_norm(const RunConfig& c) {
  const TestFunction f = lookup(c.function_id);
  const auto r = weighted_norm(f, SpaceParams{c.p, c.alpha});
  std::ostringstream out;
  out << "function,p,alpha,norm,converged\n";
  out << f.id() << ',' << format_p(c.p) << ',' << format_real(c.alpha) << ',' << format_real(r.value) << ','
      << (r.converged ? "true" : "false") << '\n';
  return {out.str(), r.converged};
}

Output run_bestapprox(const RunConfig& c) {
  const TestFunction f = lookup(c.function_id);
  const SpaceParams params{c.p, c.alpha};
  require_hypothesis(params, c.allow_out_of_hypothesis);
  const int lo = c.n > 0 ? c.n : 1;
  const int hi = c.n > 0 ? c.n : c.n_max;
  std::vector<BestApproxResult> results(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(results.size(), [&](std::size_t i) { results[i] = best_approx(f, lo + static_cast<int>(i), params); });

  Output o;
  std::ostringstream out;
  out << "# function: " << f.id() << '\n';
  out << "n,p,alpha,error,converged,iterations\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    o.converged = o.converged && r.converged;
    out << lo + static_cast<int>(i) << ',' << format_p(c.p) << ',' << format_real(c.alpha) << ','
        << format_real(r.error) << ',' << (r.converged ? "true" : "false") << ',' << r.iterations << '\n';
  }
  o.body = out.str();
  return o;
}

Output run_modulus(const RunConfig& c) {
  const TestFunction f = lookup(c.function_id);
  const SpaceParams params{c.p, c.alpha};
  require_hypothesis(params, c.allow_out_of_hypothesis);
  const auto results = modulus_curve(f, c.deltas, params, modulus_options(c));
  Output o;
  std::ostringstream out;
  out << "# function: " << f.id() << '\n';
  out << "delta,p,alpha,omega,argmax_t,t_grid,refined,converged\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    o.converged = o.converged && r.converged;
    out << format_real(c.deltas[i]) << ',' << format_p(c.p) << ',' << format_real(c.alpha) << ','
        << format_real(r.value) << ',' << format_real(r.argmax_t) << ',' << r.t_grid_size << ','
        << (r.refined ? "true" : "false") << ',' << (r.converged ? "true" : "false") << '\n';
  }
  o.body = out.str();
  return o;
}

VerifyOptions verify_options(const RunConfig& c) {
  VerifyOptions v;
  v.allow_out_of_hypothesis = c.allow_out_of_hypothesis;
  v.degree_probe = c.degree_probe;
  v.modulus = modulus_options(c);
  return v;
}

Output run_verify(const RunConfig& c) {
  const TheoremReport report =
      verify_theorem(lookup(c.function_id), SpaceParams{c.p, c.alpha}, c.n_max, verify_options(c));
  return {report_csv(report), report.converged};
}

struct SweepPlan {
  std::vector<std::string> functions;
  std::vector<SpaceParams> params;
  int n_max = 16;
  bool allow = false;
};

// [sweep] functions = a, b, ...  n_max = N  allow_out_of_hypothesis = false
// [params.<name>] p = ...  alpha = ...   (one section per (p, alpha), in order)
SweepPlan read_sweep(const RunConfig& c) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(c.config_path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw UsageError(std::string("--config: ") + e.what());
  }
  SweepPlan plan;
  plan.allow = c.allow_out_of_hypothesis;
  try {
    if (const auto sweep = tree.get_child_optional("sweep")) {
      if (const auto fs = sweep->get_optional<std::string>("functions")) plan.functions = split_list(*fs);
      plan.n_max = sweep->get<int>("n_max", plan.n_max);
      plan.allow = plan.allow || sweep->get<bool>("allow_out_of_hypothesis", false);
    }
    for (const auto& [name, section] : tree) {
      if (name.rfind("params", 0) != 0) continue;
      SpaceParams sp;
      sp.p = parse_p_flag(section.get<std::string>("p"));
      sp.alpha = section.get<double>("alpha");
      if (!(sp.alpha >= 0.0)) throw UsageError("--config: [" + name + "] alpha must be >= 0");
      plan.params.push_back(sp);
    }
  } catch (const pt::ptree_error& e) {
    throw UsageError(std::string("--config: ") + e.what());
  }
  if (plan.functions.empty()) plan.functions = registry_list();
  for (const auto& id : plan.functions) check_function(id, "--config");
  if (plan.params.empty()) throw UsageError("--config: no [params.*] sections");
  if (plan.n_max < 2) throw UsageError("--config: n_max must be >= 2");
  for (const auto& sp : plan.params) require_hypothesis(sp, plan.allow);
  return plan;
}

Output run_sweep(const RunConfig& c) {
  const SweepPlan plan = read_sweep(c);
  struct Job {
    std::string id;
    SpaceParams params;
  };
  std::vector<Job> jobs;
  for (const auto& sp : plan.params) {
    for (const auto& id : plan.functions) jobs.push_back({id, sp});
  }
  VerifyOptions options = verify_options(c);
  options.allow_out_of_hypothesis = plan.allow;
  std::vector<TheoremReport> reports(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    reports[i] = verify_theorem(lookup(jobs[i].id), jobs[i].params, plan.n_max, options);
  });

  Output o;
  std::ostringstream out;
  out << "# gensmooth sweep\n";
  out << "# version: " << GENSMOOTH_VERSION << '\n';
  out << "function,p,alpha,n_max,c1_hat,c2_hat,degenerate,converged,out_of_hypothesis\n";
  for (const auto& r : reports) {
    o.converged = o.converged && r.converged;
    out << r.function_id << ',' << format_p(r.params.p) << ',' << format_real(r.params.alpha) << ',' << r.n_max << ','
        << format_real(r.c1_hat) << ',' << format_real(r.c2_hat) << ',' << (r.degenerate ? "true" : "false") << ','
        << (r.converged ? "true" : "false") << ',' << (r.out_of_hypothesis ? "true" : "false") << '\n';
  }
  o.body = out.str();
  return o;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Generalised translation, modulus of smoothness and weighted polynomial approximation", "gensmooth"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(GENSMOOTH_VERSION));

  std::string p_text;
  double t_max = 0.0;

  const auto add_function = [&](CLI::App* sub) {
    sub->add_option("--function", c.function_id, "Registry id, e.g. absx or absx_pow(1.5)")->required();
  };
  const auto add_space = [&](CLI::App* sub) {
    sub->add_option("--p", p_text, "Exponent p >= 1, or inf")->required();
    sub->add_option("--alpha", c.alpha, "Weight exponent alpha >= 0")->required();
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", c.output_path, "Output CSV path (default: standard output)");
    sub->add_option("--t-max", t_max, "Largest |t| for the operator (<= pi - 0.1)");
  };
  const auto add_gate = [&](CLI::App* sub) {
    sub->add_flag("--allow-out-of-hypothesis", c.allow_out_of_hypothesis,
                  "Permit (p, alpha) outside the theorem's hypotheses");
  };

  auto* translate = app.add_subcommand("translate", "Evaluate tau_t(f, x)");
  add_function(translate);
  translate->add_option("--t", c.t, "Translation parameter")->required();
  translate->add_option("--x", c.xs, "Evaluation points in (-1, 1); repeatable");
  add_common(translate);

  auto* norm = app.add_subcommand("norm", "Weighted norm ||f||_{p,alpha}");
  add_function(norm);
  add_space(norm);
  add_common(norm);

  auto* best = app.add_subcommand("bestapprox", "Best approximation E_n(f)_{p,alpha}");
  add_function(best);
  add_space(best);
  auto* n_opt = best->add_option("--n", c.n, "Polynomial degree bound n (degree <= n - 1)");
  auto* nmax_best = best->add_option("--nmax", c.n_max, "Tabulate n = 1..nmax");
  n_opt->excludes(nmax_best);
  add_gate(best);
  add_common(best);

  auto* mod = app.add_subcommand("modulus", "Generalised modulus of smoothness");
  add_function(mod);
  add_space(mod);
  mod->add_option("--delta", c.deltas, "Step bound; repeatable, nondecreasing")->required();
  mod->add_option("--t-grid", c.t_grid, "Odd number of t samples on [-delta, delta]");
  add_gate(mod);
  add_common(mod);

  auto* verify = app.add_subcommand("verify", "Table of E_n and omega(f, 1/n) with empirical constants");
  add_function(verify);
  add_space(verify);
  verify->add_option("--nmax", c.n_max, "Largest n")->required();
  verify->add_option("--t-grid", c.t_grid, "Odd number of t samples per modulus");
  verify->add_flag("--degree-probe", c.degree_probe, "Record the degree-preservation residual");
  add_gate(verify);
  add_common(verify);

  auto* sweep = app.add_subcommand("sweep", "Run verify over functions x (p, alpha) from an INI file");
  sweep->add_option("--config", c.config_path, "INI file with [sweep] and [params.*] sections")->required();
  add_gate(sweep);
  add_common(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    c.help = (app.get_subcommands().empty() ? &app : app.get_subcommands().front())->help();
    return c;
  } catch (const CLI::CallForVersion&) {
    c.help = std::string(GENSMOOTH_VERSION) + "\n";
    return c;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (name == "translate") c.command = Command::translate;
  if (name == "norm") c.command = Command::norm;
  if (name == "bestapprox") c.command = Command::bestapprox;
  if (name == "modulus") c.command = Command::modulus;
  if (name == "verify") c.command = Command::verify;
  if (name == "sweep") c.command = Command::sweep;

  if (c.command != Command::sweep) check_function(c.function_id, "--function");
  if (sub->get_option_no_throw("--p") && sub->count("--p") > 0) c.p = parse_p_flag(p_text);
  if (!(c.alpha >= 0.0) || !std::isfinite(c.alpha)) throw UsageError("--alpha: must be a finite value >= 0");
  if (sub->count("--t-max") > 0) {
    if (!(t_max > 0.0) || t_max > kMaxTMax) throw UsageError("--t-max: must lie in (0, pi - 0.1]");
    c.t_max_override = t_max;
  }
  const double limit = c.t_max_override.value_or(TranslationOptions{}.t_max);

  switch (c.command) {
    case Command::translate:
      if (!(std::abs(c.t) <= limit)) throw UsageError("--t: |t| must not exceed t_max");
      for (double x : c.xs) {
        if (!(std::abs(x) < 1.0)) throw UsageError("--x: points must lie in (-1, 1)");
      }
      break;
    case Command::norm:
      break;
    case Command::bestapprox:
      if (sub->count("--n") == 0 && sub->count("--nmax") == 0) throw UsageError("--n: one of --n or --nmax is required");
      if (sub->count("--n") > 0 && c.n < 1) throw UsageError("--n: must be >= 1");
      if (sub->count("--nmax") > 0 && c.n_max < 1) throw UsageError("--nmax: must be >= 1");
      break;
    case Command::modulus:
      for (std::size_t i = 0; i < c.deltas.size(); ++i) {
        if (!(c.deltas[i] >= 0.0) || c.deltas[i] > limit) throw UsageError("--delta: must lie in [0, t_max]");
        if (i > 0 && c.deltas[i] < c.deltas[i - 1]) throw UsageError("--delta: values must be nondecreasing");
      }
      [[fallthrough]];
    case Command::verify:
      if (c.t_grid < 3 || c.t_grid % 2 == 0) throw UsageError("--t-grid: must be odd and >= 3");
      if (c.command == Command::verify) {
        if (c.n_max < 2) throw UsageError("--nmax: must be >= 2");
        if (limit < 1.0) throw UsageError("--t-max: verify evaluates the modulus at delta = 1");
      }
      break;
    case Command::sweep:
      if (limit < 1.0) throw UsageError("--t-max: sweep evaluates the modulus at delta = 1");
      break;
  }
  return c;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) {
      f.close();
      fs::remove(tmp);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  fs::rename(tmp, target);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.help) {
    out << *config.help;
    return 0;
  }
  Output result;
  try {
    switch (config.command) {
      case Command::translate: result = run_translate(config); break;
      case Command::norm: result = run_norm(config); break;
      case Command::bestapprox: result = run_bestapprox(config); break;
      case Command::modulus: result = run_modulus(config); break;
      case Command::verify: result = run_verify(config); break;
      case Command::sweep: result = run_sweep(config); break;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical_failure(e.code()) ? 2 : 1;
  }

  try {
    if (config.output_path.empty()) {
      out << result.body;
    } else {
      write_atomic(config.output_path, result.body);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (!result.converged) {
    err << "warning: some results did not converge (see the converged column)\n";
    return 2;
  }
  return 0;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  }
  return run(config, std::cout, std::cerr);
}

}  // namespace gensmooth::cli
