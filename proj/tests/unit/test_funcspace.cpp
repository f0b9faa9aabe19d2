#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gensmooth/error.hpp"
#include "gensmooth/funcspace.hpp"

using namespace gensmooth;

namespace {

bool literal_condition(double p, double a) {
  if (p == 1.0) return 0.5 < a && a <= 1.0;
  if (p == kInfinity) return 1.0 <= a && a < 1.5;
  return 1.0 - 1.0 / (2.0 * p) < a && a < 1.5 - 1.0 / (2.0 * p);
}

const std::vector<SpaceParams> kValidSet = {{1.0, 0.75}, {1.0, 1.0}, {1.5, 1.0}, {2.0, 1.0},
                                            {3.0, 1.2},  {kInfinity, 1.0}, {kInfinity, 1.2}};

}  // namespace

TEST_CASE("validate_params examples") {
  CHECK(validate_params(1.0, 0.75));
  CHECK(validate_params(2.0, 1.0));
  CHECK_FALSE(validate_params(kInfinity, 0.9));
  CHECK_FALSE(validate_params(1.0, 0.5));
}

TEST_CASE("validate_params boundaries") {
  CHECK(validate_params(1.0, 1.0));
  CHECK_FALSE(validate_params(1.0, 1.0000001));
  CHECK(validate_params(kInfinity, 1.0));
  CHECK_FALSE(validate_params(kInfinity, 1.5));
  CHECK_FALSE(validate_params(2.0, 0.75));
  CHECK_FALSE(validate_params(2.0, 1.25));
  CHECK(validate_params(2.0, 0.7500001));
}

TEST_CASE("validate_params rejects p < 1") {
  for (double p : {0.5, 0.999, -1.0, std::nan("")}) {
    try {
      validate_params(p, 1.0);
      FAIL("expected invalid_p");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_p);
    }
  }
}

TEST_CASE("validate_params agrees with the condition table on random samples") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> alpha(0.0, 2.0);
  std::uniform_real_distribution<double> p_mid(1.0, 20.0);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int i = 0; i < 1000; ++i) {
    const int k = kind(rng);
    const double p = k == 0 ? 1.0 : (k == 1 ? kInfinity : p_mid(rng));
    const double a = alpha(rng);
    CHECK(validate_params(p, a) == literal_condition(p, a));
  }
}

TEST_CASE("SpaceParams::make and parse_p") {
  CHECK(SpaceParams::make(2.0, 1.0).theorem_valid());
  CHECK_THROWS_AS(SpaceParams::make(0.5, 1.0), Error);
  CHECK_THROWS_AS(SpaceParams::make(2.0, -0.1), Error);
  CHECK(parse_p("inf") == kInfinity);
  CHECK(parse_p("2.5") == 2.5);
  CHECK_THROWS_AS(parse_p("0.5"), Error);
  CHECK_THROWS_AS(parse_p("two"), Error);
  CHECK(format_p(kInfinity) == "inf");
  CHECK(format_p(2.0) == "2");
}

TEST_CASE("weighted_norm examples") {
  const auto one = lookup("one");
  CHECK(weighted_norm(one, {2.0, 0.5}).value == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-12));
  CHECK(weighted_norm(one, {kInfinity, 1.0}).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(weighted_norm(lookup("x"), {kInfinity, 1.0}).value == doctest::Approx(2.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-10));
  CHECK(weighted_norm(one, {1.0, 1.0}).value == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(weighted_norm(lookup("zero"), {1.0, 1.0}).value == 0.0);
}

TEST_CASE("weighted_norm of kinked functions") {
  // int x^2 (1 - x^2)^2 dx = 16/105
  CHECK(weighted_norm(lookup("absx"), {2.0, 1.0}).value == doctest::Approx(std::sqrt(16.0 / 105.0)).epsilon(1e-10));
  // sup |x|^{3/2} (1 - x^2): maximum at x^2 = 3/7
  const double x2 = 3.0 / 7.0;
  CHECK(weighted_norm(lookup("absx_pow(1.5)"), {kInfinity, 1.0}).value ==
        doctest::Approx(std::pow(x2, 0.75) * (1.0 - x2)).epsilon(1e-10));
  const auto r = weighted_norm(lookup("step_smooth"), {1.0, 0.75});
  CHECK(r.converged);
  CHECK(r.grid_size_used > 0);
}

TEST_CASE("weighted_norm homogeneity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> c(-5.0, 5.0);
  for (const auto& id : registry_list()) {
    const auto f = lookup(id);
    for (const auto& sp : kValidSet) {
      const double k = c(rng);
      const double a = weighted_norm(f, sp).value;
      const double b = weighted_norm(scaled(f, k), sp).value;
      CHECK(std::abs(b - std::abs(k) * a) <= 1e-10 * std::max(1e-300, std::abs(k) * a) + 1e-14);
    }
  }
}

TEST_CASE("weighted_norm triangle inequality") {
  std::mt19937_64 rng(12);
  const auto ids = registry_list();
  std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
  for (int i = 0; i < 12; ++i) {
    const auto f = lookup(ids[pick(rng)]);
    const auto g = lookup(ids[pick(rng)]);
    for (const auto& sp : kValidSet) {
      const double lhs = weighted_norm(sum(f, g), sp).value;
      CHECK(lhs <= weighted_norm(f, sp).value + weighted_norm(g, sp).value + 1e-10);
    }
  }
}

TEST_CASE("weighted_norm decreases as alpha grows") {
  for (const auto& id : registry_list()) {
    const auto f = lookup(id);
    for (double p : {1.0, 2.0, 3.0, kInfinity}) {
      double prev = kInfinity;
      for (double a : {0.0, 0.5, 1.0, 1.4}) {
        const double v = weighted_norm(f, {p, a}).value;
        CHECK(v <= prev + 1e-12);
        prev = v;
      }
    }
  }
}

TEST_CASE("weighted_norm rejects non-finite samples") {
  const TestFunction bad("bad", [](double x) { return x > 0.3 ? INFINITY : 0.0; });
  CHECK_THROWS_AS(weighted_norm(bad, {2.0, 1.0}), Error);
  CHECK_THROWS_AS(weighted_norm(bad, {kInfinity, 1.0}), Error);
}

TEST_CASE("registry contents") {
  const auto ids = registry_list();
  for (const char* id : {"one", "x", "x2", "x3", "absx", "absx_pow(1.5)", "step_smooth", "expx", "runge", "cheb_k(3)"}) {
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
  std::vector<std::string> sorted(ids);
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  for (const auto& id : ids) {
    const auto f = lookup(id);
    CHECK(f.id() == id);
    for (int i = 0; i <= 40; ++i) CHECK(std::isfinite(f(-1.0 + i / 20.0)));
  }
}

TEST_CASE("registry families and lookup errors") {
  CHECK(lookup("absx_pow(0.5)")(0.25) == doctest::Approx(0.5));
  CHECK(lookup("absx_pow(1.5)").has_holder_point());
  CHECK(lookup("cheb_k(4)")(0.3) == doctest::Approx(std::cos(4.0 * std::acos(0.3))).epsilon(1e-14));
  CHECK(lookup("step_smooth")(0.0) == doctest::Approx(0.5));
  CHECK(lookup("step_smooth")(-0.7) == 0.0);
  CHECK(lookup("step_smooth")(0.7) == 1.0);
  CHECK_FALSE(registry_contains("no_such"));
  CHECK_FALSE(registry_contains("absx_pow(-1)"));
  CHECK_FALSE(registry_contains("cheb_k(2.5)"));
  try {
    lookup("no_such");
    FAIL("expected not_found");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_found);
  }
}

TEST_CASE("combinators") {
  const auto f = lookup("x2");
  const auto g = lookup("x");
  CHECK(scaled(f, -2.0)(0.5) == doctest::Approx(-0.5));
  CHECK(sum(f, g)(0.5) == doctest::Approx(0.75));
  CHECK(shifted(f, 3.0)(0.5) == doctest::Approx(3.25));
  const Polynomial t1({0.0, 1.0});
  CHECK(minus_polynomial(f, t1)(0.5) == doctest::Approx(-0.25));
  CHECK(from_polynomial(t1)(0.25) == doctest::Approx(0.25));
  CHECK(sum(lookup("absx"), lookup("step_smooth")).breakpoints().size() == 3);
}
