#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gensmooth {

/// Polynomial of degree <= degree_bound() stored by its Chebyshev coefficients.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> cheb_coeffs);

  static Polynomial zero(int degree_bound);

  /// Interpolant through values at the first-kind Chebyshev points
  /// cos(pi (j + 1/2) / m), j = 0..m-1, where m = values.size().
  static Polynomial interpolate_chebyshev_points(std::span<const double> values);
  static std::vector<double> chebyshev_points(std::size_t m);

  double operator()(double x) const noexcept;  // Clenshaw
  int degree_bound() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(double c);

 private:
  std::vector<double> coeffs_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator*(double c, Polynomial p);

/// T_0(x)..T_{out.size()-1}(x).
void chebyshev_values(double x, std::span<double> out) noexcept;

}  // namespace gensmooth
