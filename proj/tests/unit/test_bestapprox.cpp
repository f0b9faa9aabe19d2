#include <doctest.h>

#include <cmath>
#include <random>

#include "golden_values.hpp"
#include "gensmooth/bestapprox.hpp"
#include "gensmooth/error.hpp"

using namespace gensmooth;

namespace {

const std::vector<SpaceParams> kParams = {{1.0, 0.75}, {2.0, 1.0}, {3.0, 1.1}, {kInfinity, 1.2}};

double rel_diff(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

Polynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  std::vector<double> coeffs(degree + 1);
  for (double& v : coeffs) v = c(rng);
  return Polynomial(coeffs);
}

}  // namespace

TEST_CASE("best_l2 examples") {
  for (double a : {0.0, 0.5, 1.0, 1.4}) CHECK(best_l2(lookup("cheb_k(3)"), 4, a).error <= 1e-11);
  const auto r = best_l2(lookup("one"), 1, 0.5);
  CHECK(r.poly(0.3) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.error <= 1e-14);
  CHECK(rel_diff(best_l2(lookup("absx"), 8, 1.0).error, golden::kL2AbsN8Alpha1) <= 1e-5);
}

TEST_CASE("best_l2 table against the dense least-squares oracle") {
  for (int n = 1; n <= 8; ++n) {
    const auto r = best_l2(lookup("absx"), n, 1.0);
    CHECK(r.converged);
    CHECK(rel_diff(r.error, golden::kL2AbsAlpha1[n - 1]) <= 1e-5);
  }
}

TEST_CASE("best_linf examples") {
  const auto r = best_linf(lookup("x3"), 3, 0.0);
  CHECK(r.converged);
  CHECK(std::abs(r.error - 0.25) <= 1e-8);
  CHECK(r.poly.coeffs()[1] == doctest::Approx(0.75).epsilon(1e-8));
  CHECK(std::abs(r.poly.coeffs()[0]) <= 1e-10);
  CHECK(std::abs(r.poly.coeffs()[2]) <= 1e-10);

  const auto c = best_linf(lookup("x2"), 1, 0.0);
  CHECK(std::abs(c.error - 0.5) <= 1e-8);
  CHECK(c.poly(0.0) == doctest::Approx(0.5).epsilon(1e-8));

  CHECK(std::abs(best_linf(lookup("absx"), 6, 1.0).error - golden::kLinfAbsN6Alpha1) <= 1e-6);
}

TEST_CASE("best_linf against the grid LP oracle") {
  const std::pair<const char*, const std::array<double, 8>*> cases[] = {
      {"absx", &golden::kLinfAbsAlpha1}, {"expx", &golden::kLinfExpAlpha1}, {"runge", &golden::kLinfRungeAlpha1}};
  for (const auto& [id, table] : cases) {
    for (int n = 1; n <= 8; ++n) {
      const auto r = best_linf(lookup(id), n, 1.0);
      CHECK(r.converged);
      CHECK(std::abs(r.error - (*table)[n - 1]) <= 1e-6);
    }
  }
}

TEST_CASE("best_linf levelled reference") {
  for (const char* id : {"absx", "expx", "runge", "step_smooth"}) {
    for (int n : {2, 5, 9}) {
      const auto r = best_linf(lookup(id), n, 1.2);
      REQUIRE(r.converged);
      REQUIRE(r.reference.size() == static_cast<std::size_t>(n + 1));
      double lo = kInfinity, hi = 0.0;
      for (std::size_t i = 0; i < r.reference_errors.size(); ++i) {
        lo = std::min(lo, std::abs(r.reference_errors[i]));
        hi = std::max(hi, std::abs(r.reference_errors[i]));
        if (i > 0) {
          CHECK(r.reference[i] > r.reference[i - 1]);
          CHECK(r.reference_errors[i] * r.reference_errors[i - 1] < 0.0);
        }
      }
      CHECK(hi - lo <= 1e-6 * hi);
      for (double x : r.reference) CHECK(std::abs(x) < 1.0);
    }
  }
}

TEST_CASE("best_lp examples") {
  CHECK(best_lp(lookup("cheb_k(2)"), 3, {1.5, 0.9}).error <= 1e-9);
  const auto lp2 = best_lp(lookup("absx"), 4, {2.0, 1.0});
  CHECK(std::abs(lp2.error - best_l2(lookup("absx"), 4, 1.0).error) <= 1e-8);
  CHECK(std::abs(best_lp(lookup("expx"), 5, {1.0, 0.75}).error - golden::kL1ExpAlpha075[4]) <= 1e-5);
}

TEST_CASE("best_lp p = 1 against the grid LP oracle") {
  const std::pair<const char*, const std::array<double, 8>*> cases[] = {
      {"absx", &golden::kL1AbsAlpha075}, {"expx", &golden::kL1ExpAlpha075}, {"runge", &golden::kL1RungeAlpha075}};
  for (const auto& [id, table] : cases) {
    for (int n = 1; n <= 8; ++n) {
      const auto r = best_lp(lookup(id), n, {1.0, 0.75});
      CHECK(r.converged);
      CHECK(std::abs(r.error - (*table)[n - 1]) <= 1e-5);
    }
  }
}

TEST_CASE("best_lp p = 2 reproduces best_l2") {
  for (const char* id : {"absx", "expx", "runge", "step_smooth"}) {
    for (int n = 1; n <= 8; ++n) {
      CHECK(std::abs(best_lp(lookup(id), n, {2.0, 1.0}).error - best_l2(lookup(id), n, 1.0).error) <= 1e-8);
    }
  }
}

TEST_CASE("best_lp rejects p = inf and p < 1") {
  CHECK_THROWS_AS(best_lp(lookup("x"), 2, {kInfinity, 1.0}), Error);
  CHECK_THROWS_AS(best_lp(lookup("x"), 2, {0.5, 1.0}), Error);
  CHECK_THROWS_AS(best_l2(lookup("x"), 0, 1.0), Error);
  CHECK_THROWS_AS(best_linf(lookup("x"), 0, 1.0), Error);
}

TEST_CASE("best_approx examples") {
  for (const auto& sp : kParams) {
    for (int n : {1, 3, 6}) CHECK(best_approx(lookup("zero"), n, sp).error == 0.0);
  }
  CHECK(std::abs(best_approx(lookup("x3"), 3, {kInfinity, 0.0}).error - 0.25) <= 1e-8);
  CHECK(rel_diff(best_approx(lookup("absx"), 8, {2.0, 1.0}).error, golden::kL2AbsN8Alpha1) <= 1e-5);
}

TEST_CASE("E_n is nonincreasing in n and bounded by the norm") {
  for (const char* id : {"absx", "absx_pow(1.5)", "step_smooth", "expx", "runge"}) {
    const auto f = lookup(id);
    for (const auto& sp : kParams) {
      double prev = weighted_norm(f, sp).value;
      for (int n = 1; n <= 32; n += (n < 8 ? 1 : 5)) {
        const auto r = best_approx(f, n, sp);
        CHECK(r.error <= prev + 1e-10);
        prev = r.error;
      }
    }
  }
}

TEST_CASE("polynomial invariance") {
  std::mt19937_64 rng(99);
  for (const char* id : {"absx", "step_smooth", "runge"}) {
    const auto f = lookup(id);
    for (const auto& sp : kParams) {
      for (int n : {3, 7}) {
        const double base = best_approx(f, n, sp).error;
        const auto shifted_f = sum(f, from_polynomial(random_poly(rng, n - 1)));
        CHECK(rel_diff(best_approx(shifted_f, n, sp).error, base) <= 1e-8);
      }
    }
  }
}

TEST_CASE("homogeneity") {
  std::mt19937_64 rng(100);
  std::uniform_real_distribution<double> c(-4.0, 4.0);
  for (const char* id : {"absx", "absx_pow(1.5)", "expx"}) {
    const auto f = lookup(id);
    for (const auto& sp : kParams) {
      const int n = 5;
      const double k = c(rng);
      const double base = best_approx(f, n, sp).error;
      CHECK(rel_diff(best_approx(scaled(f, k), n, sp).error, std::abs(k) * base) <= 1e-8);
    }
  }
}

TEST_CASE("polynomials of degree < n are reproduced") {
  for (const auto& sp : kParams) {
    CHECK(best_approx(lookup("x2"), 3, sp).error <= 1e-10);
    CHECK(best_approx(lookup("cheb_k(3)"), 5, sp).error <= 1e-10);
  }
}
