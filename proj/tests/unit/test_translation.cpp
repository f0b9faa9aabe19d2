#include <doctest.h>

#include <cmath>
#include <random>

#include "golden_values.hpp"
#include "gensmooth/error.hpp"
#include "gensmooth/quadrature.hpp"
#include "gensmooth/translation.hpp"

using namespace gensmooth;

namespace {

// The operator as written, without the difference form.
double translate_direct(const TestFunction& f, double t, double x, int order = 256) {
  const auto& rule = cached_phi_rule(order);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const auto k = kernel_parts(x, t, rule.nodes[i]);
    s += rule.weights[i] * k.kernel_value * f(k.argument_b);
  }
  const double c = std::cos(t / 2.0);
  return s / (M_PI * (1.0 - x * x) * c * c * c * c);
}

std::vector<double> interior_points(int count) {
  std::vector<double> xs;
  for (int i = 0; i < count; ++i) xs.push_back(std::cos(M_PI * (i + 0.5) / count));
  return xs;
}

}  // namespace

TEST_CASE("kernel_parts at t = 0") {
  for (double x : {-0.9, -0.2, 0.0, 0.55}) {
    for (double phi : {0.0, 0.7, 2.9}) {
      const auto k = kernel_parts(x, 0.0, phi);
      CHECK(k.weight_a == doctest::Approx(std::sqrt(1.0 - x * x)).epsilon(1e-15));
      CHECK(k.argument_b == doctest::Approx(x).epsilon(1e-15));
      CHECK(k.kernel_value == doctest::Approx(1.0 - x * x).epsilon(1e-14));
    }
  }
}

TEST_CASE("kernel_parts at x = 0, t = pi/2, phi = pi/2") {
  const auto k = kernel_parts(0.0, M_PI / 2.0, M_PI / 2.0);
  CHECK(k.weight_a == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(k.argument_b) <= 1e-16);
  CHECK(k.kernel_value == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("kernel_parts golden value") {
  const auto k = kernel_parts(0.6, 0.3, 1.1);
  CHECK(k.weight_a == doctest::Approx(golden::kKernelA_06_03_11).epsilon(1e-15));
  CHECK(k.argument_b == doctest::Approx(golden::kKernelB_06_03_11).epsilon(1e-15));
  CHECK(k.kernel_value == doctest::Approx(golden::kKernelValue_06_03_11).epsilon(1e-14));
}

TEST_CASE("kernel_parts domain") {
  CHECK_THROWS_AS(kernel_parts(1.0, 0.2, 0.3), Error);
  CHECK_THROWS_AS(kernel_parts(-1.5, 0.2, 0.3), Error);
}

TEST_CASE("argument B stays in [-1, 1]") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(-0.999999, 0.999999), ut(-1.0, 1.0), up(0.0, M_PI);
  for (int i = 0; i < 20000; ++i) {
    const auto k = kernel_parts(ux(rng), ut(rng), up(rng));
    CHECK(std::abs(k.argument_b) <= 1.0);
  }
}

TEST_CASE("translate examples") {
  for (const auto& id : registry_list()) {
    const auto f = lookup(id);
    CHECK(translate(f, 0.0, 0.3) == f(0.3));
  }
  CHECK(std::abs(translate(lookup("one"), 0.7, -0.2) - 1.0) <= 1e-12);
  CHECK(translate(lookup("x2"), 0.0, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(std::abs(translate(lookup("x"), 0.5, 0.0) - golden::kTranslateX_t05_x0) <= 1e-12);
}

TEST_CASE("translate golden values") {
  CHECK(translate(lookup("x"), 0.5, 0.3) == doctest::Approx(golden::kTranslateX_t05_x03).epsilon(1e-12));
  CHECK(translate(lookup("expx"), 0.7, -0.4) == doctest::Approx(golden::kTranslateExp_t07_xm04).epsilon(1e-12));
  CHECK(translate(lookup("absx"), 0.4, 0.2) == doctest::Approx(golden::kTranslateAbs_t04_x02).epsilon(1e-11));
  CHECK(translate(lookup("absx"), -0.3, -0.7) == doctest::Approx(golden::kTranslateAbs_tm03_xm07).epsilon(1e-11));
}

TEST_CASE("identity at t = 0 on 100 interior points") {
  const auto xs = interior_points(100);
  for (const auto& id : registry_list()) {
    const auto f = lookup(id);
    for (double x : xs) CHECK(std::abs(translate(f, 0.0, x) - f(x)) <= 1e-11);
  }
}

TEST_CASE("constants are preserved") {
  const auto one = lookup("one");
  const auto xs = interior_points(33);
  for (int i = 0; i <= 20; ++i) {
    const double t = -1.0 + 0.1 * i;
    for (double x : xs) CHECK(std::abs(translate(one, t, x) - 1.0) <= 1e-9);
  }
}

TEST_CASE("difference form agrees with the direct form") {
  for (const char* id : {"x", "x3", "expx", "runge", "cheb_k(3)"}) {
    const auto f = lookup(id);
    for (double t : {-0.8, -0.25, 0.1, 0.6, 1.0}) {
      for (double x : {-0.9, -0.35, 0.0, 0.42, 0.95}) {
        CHECK(translate(f, t, x) == doctest::Approx(translate_direct(f, t, x)).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("the operator is even in t") {
  for (const char* id : {"x", "expx", "absx", "step_smooth", "absx_pow(1.5)"}) {
    const auto f = lookup(id);
    for (double t : {0.05, 0.3, 0.9}) {
      for (double x : {-0.7, -0.1, 0.33, 0.8}) {
        CHECK(translate(f, -t, x) == doctest::Approx(translate(f, t, x)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("linearity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> c(-3.0, 3.0), ux(-0.95, 0.95), ut(-1.0, 1.0);
  const auto ids = registry_list();
  std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
  for (int i = 0; i < 40; ++i) {
    const auto f = lookup(ids[pick(rng)]);
    const auto g = lookup(ids[pick(rng)]);
    const double a = c(rng), b = c(rng), t = ut(rng), x = ux(rng);
    const double lhs = translate(sum(scaled(f, a), scaled(g, b)), t, x);
    const double rhs = a * translate(f, t, x) + b * translate(g, t, x);
    CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("continuity in t") {
  const auto f = lookup("expx");
  for (double x : {-0.6, 0.2, 0.9}) {
    const double base = translate(f, 0.4, x);
    const double d2 = std::abs(translate(f, 0.4 + 1e-2, x) - base);
    const double d3 = std::abs(translate(f, 0.4 + 1e-3, x) - base);
    CHECK(d3 < d2);
    CHECK(d3 <= 0.2 * d2);
  }
}

TEST_CASE("translate_grid matches scalar translate") {
  const auto one = lookup("one");
  const auto xs = interior_points(5);
  for (double v : translate_grid(one, 0.4, xs)) CHECK(std::abs(v - 1.0) <= 1e-9);

  const auto f = lookup("absx");
  const auto ys = translate_grid(f, 0.0, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(ys[i] == f(xs[i]));

  const std::vector<double> zero{0.0};
  CHECK(translate_grid(lookup("x2"), 0.2, zero)[0] == doctest::Approx(translate(lookup("x2"), 0.2, 0.0)).epsilon(1e-13));
}

TEST_CASE("translate errors") {
  const auto f = lookup("x");
  try {
    translate(f, 0.3, 1.0 - 1e-15);
    FAIL("expected near_endpoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::near_endpoint);
  }
  CHECK_THROWS_AS(translate(f, 1.5, 0.1), Error);
  TranslationOptions wide;
  wide.t_max = M_PI - 0.1;
  CHECK(std::isfinite(translate(f, 1.5, 0.1, wide)));

  const std::vector<double> xs{0.1, 1.0, 0.2};
  try {
    translate_grid(f, 0.3, xs);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("index 1") != std::string::npos);
  }
}

TEST_CASE("translation breakpoints") {
  const auto b = translation_breakpoints(lookup("absx"), 0.3);
  CHECK(std::find_if(b.begin(), b.end(), [](double v) { return std::abs(v - std::cos(M_PI / 2 - 0.3)) < 1e-15; }) != b.end());
  CHECK(translation_breakpoints(lookup("expx"), 0.3).empty());
}

TEST_CASE("translation defect") {
  const auto d = translation_defect(lookup("expx"), 0.5);
  CHECK(d.is_interior_only());
  CHECK(d(0.3) == doctest::Approx(translate(lookup("expx"), 0.5, 0.3) - std::exp(0.3)).epsilon(1e-12));
}

TEST_CASE("degree probe: polynomials keep their degree") {
  CHECK(degree_probe(0.5, 8) <= 1e-10);
}
