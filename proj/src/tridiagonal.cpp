#include "nlsdp/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlsdp/errors.hpp"

namespace nlsdp {

std::size_t count_eigenvalues_below(const SymTridiagonal& m, double shift) {
  const std::size_t n = m.size();
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double b2 = i > 0 ? m.off[i - 1] * m.off[i - 1] : 0.0;
    q = (m.diag[i] - shift) - (i > 0 ? b2 / q : 0.0);
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

double smallest_eigenvalue(const SymTridiagonal& m, double abs_tol) {
  if (m.size() == 0) throw std::invalid_argument("empty matrix");
  double lo = m.diag[0], hi = m.diag[0];
  for (std::size_t i = 0; i < m.size(); ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(m.off[i - 1]);
    if (i + 1 < m.size()) r += std::abs(m.off[i]);
    lo = std::min(lo, m.diag[i] - r);
    hi = std::max(hi, m.diag[i] + r);
  }
  while (hi - lo > abs_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_eigenvalues_below(m, mid) >= 1) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

TridiagonalLU::TridiagonalLU(std::vector<std::complex<double>> lower,
                             std::vector<std::complex<double>> diag,
                             std::vector<std::complex<double>> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)), pivot_(std::move(diag)) {
  const std::size_t n = pivot_.size();
  if (n == 0 || lower_.size() + 1 != n || upper_.size() + 1 != n) {
    throw std::invalid_argument("tridiagonal band sizes do not match");
  }
  // pivot_[i] becomes the i-th pivot; lower_[i-1] the multiplier l_i.
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(pivot_[i - 1]) == 0.0) throw NumericalError("tridiagonal LU: zero pivot");
    lower_[i - 1] /= pivot_[i - 1];
    pivot_[i] -= lower_[i - 1] * upper_[i - 1];
  }
  if (std::abs(pivot_[n - 1]) == 0.0) throw NumericalError("tridiagonal LU: zero pivot");
}

void TridiagonalLU::solve(std::vector<std::complex<double>>& rhs) const {
  if (rhs.size() != size()) throw std::invalid_argument("rhs size mismatch");
  solve(rhs.data());
}

void TridiagonalLU::solve(std::complex<double>* y) const {
  const std::size_t n = pivot_.size();
  for (std::size_t i = 1; i < n; ++i) y[i] -= lower_[i - 1] * y[i - 1];
  y[n - 1] /= pivot_[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) y[i] = (y[i] - upper_[i] * y[i + 1]) / pivot_[i];
}

}  // namespace nlsdp
