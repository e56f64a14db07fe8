#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace eulerform {

/// Uniform periodic grid on the flat torus [0, 2*pi)^3 with n cells per axis.
/// Cell (i, j, k) sits at (i*h, j*h, k*h); index i runs along x^1.
struct Grid {
  int n = 16;
  int stencil_order = 4;  // 2 or 4

  Grid() = default;
  Grid(int n_cells, int order);

  double spacing() const;
  double length() const;
  std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n + j) * n + k;
  }
  double coord(int i) const { return i * spacing(); }

  friend bool operator==(const Grid&, const Grid&) = default;
};

class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const Grid& grid, double value = 0.0);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return data_.size(); }
  double& operator[](std::size_t idx) { return data_[idx]; }
  double operator[](std::size_t idx) const { return data_[idx]; }
  double& at(int i, int j, int k) { return data_[grid_.index(i, j, k)]; }
  double at(int i, int j, int k) const { return data_[grid_.index(i, j, k)]; }
  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }

  /// Fills with f(x1, x2, x3) at cell positions.
  template <typename F>
  static ScalarField from_function(const Grid& grid, F&& f) {
    ScalarField out(grid);
    const double h = grid.spacing();
    for (int i = 0; i < grid.n; ++i)
      for (int j = 0; j < grid.n; ++j)
        for (int k = 0; k < grid.n; ++k) out.at(i, j, k) = f(i * h, j * h, k * h);
    return out;
  }

  bool all_finite() const;

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double a);

 private:
  Grid grid_;
  std::vector<double> data_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
/// a + s*b, used by the time integrator.
ScalarField axpy(const ScalarField& a, double s, const ScalarField& b);

/// Cartesian vector field stored component-outer: three scalar fields.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(const Grid& grid, double value = 0.0);
  VectorField(ScalarField v1, ScalarField v2, ScalarField v3);

  const Grid& grid() const { return comp_[0].grid(); }
  ScalarField& operator[](int a) { return comp_[a]; }
  const ScalarField& operator[](int a) const { return comp_[a]; }
  bool all_finite() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(double a);

 private:
  std::array<ScalarField, 3> comp_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double s, VectorField a);
VectorField axpy(const VectorField& a, double s, const VectorField& b);

// Euclidean differential operators. Axes are 0, 1, 2 for x^1, x^2, x^3.
// All use the periodic central stencil of the grid's order, so discrete
// partials commute and curl(grad f), div(curl V) vanish to roundoff.

ScalarField partial_derivative(const ScalarField& f, int axis);
VectorField gradient(const ScalarField& f);
ScalarField flat_div(const VectorField& v);
/// (curl V)^i = eps_{iab} d_a V^b with eps_{123} = 1.
VectorField flat_curl(const VectorField& v);
/// sum_a d_a d_a f as a composition of first-derivative stencils.
ScalarField laplacian(const ScalarField& f);

/// Fully antisymmetric symbol on {0,1,2}, eps(0,1,2) = 1.
constexpr int levi_civita(int i, int j, int k) {
  return (i == j || j == k || i == k) ? 0 : ((j - i + 3) % 3 == 1 ? 1 : -1);
}

double sup_norm(const ScalarField& f);
double sup_norm(const VectorField& v);
/// sqrt(h^3 * sum f^2) with a fixed pairwise summation tree, so the value
/// does not depend on thread count.
double l2_norm(const ScalarField& f);
double l2_norm(const VectorField& v);
double pairwise_sum(std::span<const double> x);

/// CSV snapshot with header `i,j,k,value`.
void write_field_csv(const std::string& path, const ScalarField& f);
/// CSV snapshot with header `i,j,k,v1,v2,v3`.
void write_field_csv(const std::string& path, const VectorField& v);

}  // namespace eulerform
