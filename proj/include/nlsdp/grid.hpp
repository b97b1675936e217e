#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace nlsdp {

using cplx = std::complex<double>;

/// Uniform symmetric mesh on [-L, L] with an odd number of nodes, so that
/// x = 0 is a node (the delta interaction sits on it).
class Grid {
public:
  /// Throws std::invalid_argument unless L > 0 and n_points is odd and >= 3.
  Grid(double half_width, std::size_t n_points);

  /// Grid with spacing as close as possible to h (node count rounded to odd).
  static Grid with_spacing(double half_width, double h);

  double half_width() const { return half_width_; }
  std::size_t size() const { return n_; }
  double spacing() const { return h_; }
  std::size_t center() const { return (n_ - 1) / 2; }
  double x(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(center())) * h_;
  }
  /// Trapezoid weight (1, or 1/2 at the two endpoints), without the factor h.
  double weight(std::size_t j) const { return (j == 0 || j + 1 == n_) ? 0.5 : 1.0; }

  bool operator==(const Grid& other) const {
    return half_width_ == other.half_width_ && n_ == other.n_;
  }

private:
  double half_width_;
  std::size_t n_;
  double h_;
};

/// Complex samples u(x_j) on a Grid.
struct ComplexField {
  Grid grid;
  std::vector<cplx> values;

  explicit ComplexField(const Grid& g) : grid(g), values(g.size(), cplx{0.0, 0.0}) {}
  ComplexField(const Grid& g, std::vector<cplx> v);

  static ComplexField sample(const Grid& g, const std::function<cplx(double)>& f);
  static ComplexField sample_real(const Grid& g, const std::function<double(double)>& f);

  std::size_t size() const { return values.size(); }
  cplx& operator[](std::size_t j) { return values[j]; }
  const cplx& operator[](std::size_t j) const { return values[j]; }
  cplx at_origin() const { return values[grid.center()]; }

  bool all_finite() const;

  ComplexField& operator+=(const ComplexField& other);
  ComplexField& operator-=(const ComplexField& other);
  ComplexField& operator*=(cplx s);
};

ComplexField operator+(ComplexField a, const ComplexField& b);
ComplexField operator-(ComplexField a, const ComplexField& b);
ComplexField operator*(cplx s, ComplexField a);

/// |z|^q given |z|^2; exact repeated products when q/2 is a small integer.
inline double abs_pow(double abs2, double q) {
  const double m = 0.5 * q;
  if (m == std::floor(m) && m >= 0.0 && m <= 8.0) {
    double r = 1.0;
    for (int i = 0; i < static_cast<int>(m); ++i) r *= abs2;
    return r;
  }
  return std::pow(abs2, m);
}

}  // namespace nlsdp
