#include <charconv>
#include <cmath>
#include <string>

#include "gensmooth/error.hpp"
#include "gensmooth/funcspace.hpp"

namespace gensmooth {

namespace {

constexpr SmoothnessTag kAnalytic{Smoothness::analytic};

// Smoothstep: 0 below -1/2, 1 above 1/2, cubic in between (C^1).
double step_smooth(double x) {
  if (x <= -0.5) return 0.0;
  if (x >= 0.5) return 1.0;
  const double s = x + 0.5;
  return s * s * (3.0 - 2.0 * s);
}

std::optional<double> parse_number(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// "name(arg)" -> arg
std::optional<std::string_view> family_argument(std::string_view id, std::string_view family) {
  if (id.size() < family.size() + 2 || id.substr(0, family.size()) != family) return std::nullopt;
  if (id[family.size()] != '(' || id.back() != ')') return std::nullopt;
  return id.substr(family.size() + 1, id.size() - family.size() - 2);
}

std::optional<TestFunction> build(std::string_view id) {
  const std::string name(id);
  if (id == "zero") return TestFunction(name, [](double) { return 0.0; }, {}, kAnalytic);
  if (id == "one") return TestFunction(name, [](double) { return 1.0; }, {}, kAnalytic);
  if (id == "x") return TestFunction(name, [](double x) { return x; }, {}, kAnalytic);
  if (id == "x2") return TestFunction(name, [](double x) { return x * x; }, {}, kAnalytic);
  if (id == "x3") return TestFunction(name, [](double x) { return x * x * x; }, {}, kAnalytic);
  if (id == "absx") {
    return TestFunction(name, [](double x) { return std::abs(x); }, {0.0}, SmoothnessTag{Smoothness::lipschitz});
  }
  if (id == "step_smooth") {
    return TestFunction(name, step_smooth, {-0.5, 0.5}, SmoothnessTag{Smoothness::piecewise});
  }
  if (id == "expx") return TestFunction(name, [](double x) { return std::exp(x); }, {}, kAnalytic);
  if (id == "runge") return TestFunction(name, [](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, {}, kAnalytic);

  if (auto arg = family_argument(id, "absx_pow")) {
    const auto beta = parse_number(*arg);
    if (!beta || !(*beta > 0.0)) return std::nullopt;
    const double b = *beta;
    return TestFunction(name, [b](double x) { return std::pow(std::abs(x), b); }, {0.0},
                        SmoothnessTag{Smoothness::holder, b});
  }
  if (auto arg = family_argument(id, "cheb_k")) {
    const auto k = parse_number(*arg);
    if (!k || *k < 0.0 || *k != std::floor(*k) || *k > 10000.0) return std::nullopt;
    std::vector<double> c(static_cast<std::size_t>(*k) + 1, 0.0);
    c.back() = 1.0;
    const Polynomial t(std::move(c));
    return TestFunction(name, [t](double x) { return t(x); }, {}, kAnalytic);
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> registry_list() {
  return {"zero", "one", "x", "x2", "x3", "absx", "absx_pow(1.5)", "step_smooth", "expx", "runge", "cheb_k(3)"};
}

TestFunction lookup(std::string_view id) {
  if (auto f = build(id)) return *f;
  throw Error(ErrorCode::not_found, "no test function '" + std::string(id) + "'");
}

bool registry_contains(std::string_view id) { return build(id).has_value(); }

}  // namespace gensmooth
