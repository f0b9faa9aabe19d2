#include "gensmooth/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "gensmooth/error.hpp"

namespace gensmooth {

Polynomial::Polynomial(std::vector<double> cheb_coeffs) : coeffs_(std::move(cheb_coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Polynomial Polynomial::zero(int degree_bound) {
  return Polynomial(std::vector<double>(std::max(degree_bound, 0) + 1, 0.0));
}

std::vector<double> Polynomial::chebyshev_points(std::size_t m) {
  std::vector<double> x(m);
  for (std::size_t j = 0; j < m; ++j) x[j] = std::cos(M_PI * (j + 0.5) / static_cast<double>(m));
  return x;
}

Polynomial Polynomial::interpolate_chebyshev_points(std::span<const double> values) {
  const std::size_t m = values.size();
  if (m == 0) throw Error(ErrorCode::empty_input, "no interpolation values");
  std::vector<double> c(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      s += values[j] * std::cos(M_PI * static_cast<double>(k) * (j + 0.5) / static_cast<double>(m));
    }
    c[k] = (k == 0 ? 1.0 : 2.0) * s / static_cast<double>(m);
  }
  return Polynomial(std::move(c));
}

double Polynomial::operator()(double x) const noexcept {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 1;) {
    const double b0 = coeffs_[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs_[0] + x * b1 - b2;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Polynomial& Polynomial::operator*=(double c) {
  for (double& v : coeffs_) v *= c;
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator*(double c, Polynomial p) { return p *= c; }

void chebyshev_values(double x, std::span<double> out) noexcept {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = x;
  for (std::size_t k = 2; k < out.size(); ++k) out[k] = 2.0 * x * out[k - 1] - out[k - 2];
}

}  // namespace gensmooth
