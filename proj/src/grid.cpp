#include "eulerform/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "eulerform/errors.hpp"

namespace eulerform {

Grid::Grid(int n_cells, int order) : n(n_cells), stencil_order(order) {
  if (n < 8 || n % 2 != 0) throw ConfigError("grid n must be even and >= 8");
  if (order != 2 && order != 4) throw ConfigError("stencil order must be 2 or 4");
}

double Grid::length() const { return 2.0 * std::numbers::pi; }
double Grid::spacing() const { return length() / n; }

ScalarField::ScalarField(const Grid& grid, double value)
    : grid_(grid), data_(grid.size(), value) {}

bool ScalarField::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  const std::size_t m = data_.size();
#pragma omp parallel for schedule(static)
  for (std::size_t q = 0; q < m; ++q) data_[q] += o.data_[q];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  const std::size_t m = data_.size();
#pragma omp parallel for schedule(static)
  for (std::size_t q = 0; q < m; ++q) data_[q] -= o.data_[q];
  return *this;
}

ScalarField& ScalarField::operator*=(double a) {
  for (double& x : data_) x *= a;
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

ScalarField axpy(const ScalarField& a, double s, const ScalarField& b) {
  ScalarField out(a.grid());
  const std::size_t m = a.size();
#pragma omp parallel for schedule(static)
  for (std::size_t q = 0; q < m; ++q) out[q] = a[q] + s * b[q];
  return out;
}

VectorField::VectorField(const Grid& grid, double value)
    : comp_{ScalarField(grid, value), ScalarField(grid, value), ScalarField(grid, value)} {}

VectorField::VectorField(ScalarField v1, ScalarField v2, ScalarField v3)
    : comp_{std::move(v1), std::move(v2), std::move(v3)} {
  if (!(comp_[0].grid() == comp_[1].grid() && comp_[1].grid() == comp_[2].grid())) {
    throw UsageError("vector components live on different grids");
  }
}

bool VectorField::all_finite() const {
  return comp_[0].all_finite() && comp_[1].all_finite() && comp_[2].all_finite();
}

VectorField& VectorField::operator+=(const VectorField& o) {
  for (int a = 0; a < 3; ++a) comp_[a] += o.comp_[a];
  return *this;
}
VectorField& VectorField::operator-=(const VectorField& o) {
  for (int a = 0; a < 3; ++a) comp_[a] -= o.comp_[a];
  return *this;
}
VectorField& VectorField::operator*=(double s) {
  for (auto& c : comp_) c *= s;
  return *this;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double s, VectorField a) { return a *= s; }

VectorField axpy(const VectorField& a, double s, const VectorField& b) {
  return VectorField(axpy(a[0], s, b[0]), axpy(a[1], s, b[1]), axpy(a[2], s, b[2]));
}

ScalarField partial_derivative(const ScalarField& f, int axis) {
  if (axis < 0 || axis > 2) throw UsageError("axis must be 0, 1 or 2");
  const Grid& g = f.grid();
  const int n = g.n;
  const double h = g.spacing();
  ScalarField out(g);
  const bool fourth = g.stencil_order == 4;
  const double w1 = fourth ? 8.0 / (12.0 * h) : 1.0 / (2.0 * h);
  const double w2 = fourth ? -1.0 / (12.0 * h) : 0.0;

#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        int p1[3] = {i, j, k}, m1[3] = {i, j, k}, p2[3] = {i, j, k}, m2[3] = {i, j, k};
        const int c = p1[axis];
        p1[axis] = (c + 1) % n;
        m1[axis] = (c - 1 + n) % n;
        p2[axis] = (c + 2) % n;
        m2[axis] = (c - 2 + n) % n;
        double d = w1 * (f.at(p1[0], p1[1], p1[2]) - f.at(m1[0], m1[1], m1[2]));
        if (fourth) d += w2 * (f.at(p2[0], p2[1], p2[2]) - f.at(m2[0], m2[1], m2[2]));
        out.at(i, j, k) = d;
      }
    }
  }
  return out;
}

VectorField gradient(const ScalarField& f) {
  return VectorField(partial_derivative(f, 0), partial_derivative(f, 1),
                     partial_derivative(f, 2));
}

ScalarField flat_div(const VectorField& v) {
  ScalarField out = partial_derivative(v[0], 0);
  out += partial_derivative(v[1], 1);
  out += partial_derivative(v[2], 2);
  return out;
}

VectorField flat_curl(const VectorField& v) {
  // (curl V)^1 = d_2 V^3 - d_3 V^2, and cyclic.
  return VectorField(partial_derivative(v[2], 1) - partial_derivative(v[1], 2),
                     partial_derivative(v[0], 2) - partial_derivative(v[2], 0),
                     partial_derivative(v[1], 0) - partial_derivative(v[0], 1));
}

ScalarField laplacian(const ScalarField& f) {
  ScalarField out = partial_derivative(partial_derivative(f, 0), 0);
  out += partial_derivative(partial_derivative(f, 1), 1);
  out += partial_derivative(partial_derivative(f, 2), 2);
  return out;
}

double sup_norm(const ScalarField& f) {
  double m = 0.0;
  for (double x : f.values()) m = std::max(m, std::abs(x));
  return m;
}

double sup_norm(const VectorField& v) {
  return std::max({sup_norm(v[0]), sup_norm(v[1]), sup_norm(v[2])});
}

double pairwise_sum(std::span<const double> x) {
  if (x.size() <= 8) {
    double s = 0.0;
    for (double y : x) s += y;
    return s;
  }
  const std::size_t half = x.size() / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

double l2_norm(const ScalarField& f) {
  std::vector<double> sq(f.size());
  for (std::size_t q = 0; q < f.size(); ++q) sq[q] = f[q] * f[q];
  const double h = f.grid().spacing();
  return std::sqrt(h * h * h * pairwise_sum(sq));
}

double l2_norm(const VectorField& v) {
  const double a = l2_norm(v[0]), b = l2_norm(v[1]), c = l2_norm(v[2]);
  return std::sqrt(a * a + b * b + c * c);
}

namespace {

std::ofstream open_csv(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open '" + path + "' for writing");
  return os;
}

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_field_csv(const std::string& path, const ScalarField& f) {
  auto os = open_csv(path);
  os << "i,j,k,value\n";
  const int n = f.grid().n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        os << i << ',' << j << ',' << k << ',' << fmt17(f.at(i, j, k)) << '\n';
}

void write_field_csv(const std::string& path, const VectorField& v) {
  auto os = open_csv(path);
  os << "i,j,k,v1,v2,v3\n";
  const int n = v.grid().n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        os << i << ',' << j << ',' << k << ',' << fmt17(v[0].at(i, j, k)) << ','
           << fmt17(v[1].at(i, j, k)) << ',' << fmt17(v[2].at(i, j, k)) << '\n';
}

}  // namespace eulerform
