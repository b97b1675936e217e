#pragma once

#include <complex>
#include <vector>

namespace nlsdp {

/// Real symmetric tridiagonal matrix: diag.size() = n, off.size() = n - 1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }

  template <class T>
  std::vector<T> apply(const std::vector<T>& v) const {
    const std::size_t n = diag.size();
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      T acc = diag[i] * v[i];
      if (i > 0) acc += off[i - 1] * v[i - 1];
      if (i + 1 < n) acc += off[i] * v[i + 1];
      out[i] = acc;
    }
    return out;
  }
};

/// Number of eigenvalues strictly below `shift` (Sturm sequence count).
std::size_t count_eigenvalues_below(const SymTridiagonal& m, double shift);

/// Smallest eigenvalue by Sturm-count bisection on the Gershgorin interval.
double smallest_eigenvalue(const SymTridiagonal& m, double abs_tol = 1e-12);

/// LU factorization (no pivoting) of a complex tridiagonal matrix with
/// sub-diagonal `lower`, diagonal `diag` and super-diagonal `upper`; reused
/// for many right-hand sides.
class TridiagonalLU {
public:
  TridiagonalLU(std::vector<std::complex<double>> lower, std::vector<std::complex<double>> diag,
                std::vector<std::complex<double>> upper);

  /// Solves in place.
  void solve(std::vector<std::complex<double>>& rhs) const;
  /// Solves in place; `rhs` points at size() values.
  void solve(std::complex<double>* rhs) const;

  std::size_t size() const { return pivot_.size(); }

private:
  std::vector<std::complex<double>> lower_;
  std::vector<std::complex<double>> upper_;
  std::vector<std::complex<double>> pivot_;
};

}  // namespace nlsdp
