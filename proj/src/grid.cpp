#include "nlsdp/grid.hpp"

#include <sstream>
#include <stdexcept>

namespace nlsdp {

Grid::Grid(double half_width, std::size_t n_points) : half_width_(half_width), n_(n_points) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("grid half width must be positive");
  }
  if (n_points < 3 || n_points % 2 == 0) {
    std::ostringstream os;
    os << "grid needs an odd node count >= 3 (got " << n_points << ")";
    throw std::invalid_argument(os.str());
  }
  h_ = 2.0 * half_width / static_cast<double>(n_points - 1);
}

Grid Grid::with_spacing(double half_width, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("grid spacing must be positive");
  auto cells = static_cast<std::size_t>(std::llround(half_width / h));
  if (cells < 1) cells = 1;
  return Grid(half_width, 2 * cells + 1);
}

ComplexField::ComplexField(const Grid& g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) throw std::invalid_argument("field length does not match grid");
}

ComplexField ComplexField::sample(const Grid& g, const std::function<cplx(double)>& f) {
  ComplexField out(g);
  for (std::size_t j = 0; j < g.size(); ++j) out.values[j] = f(g.x(j));
  return out;
}

ComplexField ComplexField::sample_real(const Grid& g, const std::function<double(double)>& f) {
  ComplexField out(g);
  for (std::size_t j = 0; j < g.size(); ++j) out.values[j] = f(g.x(j));
  return out;
}

bool ComplexField::all_finite() const {
  for (const auto& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexField& ComplexField::operator+=(const ComplexField& other) {
  if (!(grid == other.grid)) throw std::invalid_argument("fields live on different grids");
  for (std::size_t j = 0; j < values.size(); ++j) values[j] += other.values[j];
  return *this;
}

ComplexField& ComplexField::operator-=(const ComplexField& other) {
  if (!(grid == other.grid)) throw std::invalid_argument("fields live on different grids");
  for (std::size_t j = 0; j < values.size(); ++j) values[j] -= other.values[j];
  return *this;
}

ComplexField& ComplexField::operator*=(cplx s) {
  for (auto& z : values) z *= s;
  return *this;
}

ComplexField operator+(ComplexField a, const ComplexField& b) { return a += b; }
ComplexField operator-(ComplexField a, const ComplexField& b) { return a -= b; }
ComplexField operator*(cplx s, ComplexField a) { return a *= s; }

}  // namespace nlsdp
