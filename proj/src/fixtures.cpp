#include "eulerform/fixtures.hpp"

#include <cmath>

#include "eulerform/errors.hpp"
#include "eulerform/shock1d.hpp"

namespace eulerform {

FluidState smooth_fixture(const Grid& grid, const EosModel& eos, double a, double b, double d) {
  FluidState st;
  st.eos = eos;
  st.rho_log = ScalarField::from_function(
      grid, [a](double x, double y, double) { return a * std::sin(x) * std::cos(y); });
  st.v = VectorField(grid);
  st.v[0] = ScalarField::from_function(grid, [b](double, double y, double) { return b * std::sin(y); });
  st.v[1] = ScalarField::from_function(grid, [b](double, double, double z) { return b * std::sin(z); });
  st.v[2] = ScalarField::from_function(grid, [b](double x, double, double) { return b * std::sin(x); });
  st.s = ScalarField::from_function(grid, [d](double x, double, double) { return d * std::cos(x); });
  return st;
}

FluidState constant_fixture(const Grid& grid, const EosModel& eos) {
  FluidState st;
  st.eos = eos;
  st.rho_log = ScalarField(grid, 0.1);
  st.v = VectorField(grid);
  st.v[0] = ScalarField(grid, 0.2);
  st.v[1] = ScalarField(grid, -0.1);
  st.v[2] = ScalarField(grid, 0.05);
  st.s = ScalarField(grid, 0.3);
  return st;
}

FluidState plane_wave_fixture(const Grid& grid, const EosModel& eos, double amplitude) {
  const CharacteristicFan fan(RiemannMap(eos, 0.0), sinusoidal_profile(amplitude));
  return embed_plane_wave_3d(fan, 0.0, grid);
}

FluidState irrotational_fixture(const Grid& grid, const EosModel& eos, double b) {
  FluidState st;
  st.eos = eos;
  st.rho_log = ScalarField::from_function(
      grid, [](double x, double y, double z) { return 0.05 * std::cos(x + y) * std::sin(z); });
  // Discrete gradient, so the discrete curl vanishes up to roundoff.
  const ScalarField phi = ScalarField::from_function(
      grid, [b](double x, double y, double z) { return b * (std::sin(x) * std::cos(y) + std::cos(z)); });
  st.v = gradient(phi);
  st.s = ScalarField(grid, 0.2);
  return st;
}

bool known_fixture(std::string_view name) {
  return name == "smooth-default" || name == "constant" || name == "plane-wave" ||
         name == "irrotational";
}

FluidState make_fixture(std::string_view name, const Grid& grid, const EosModel& eos) {
  if (name == "smooth-default") return smooth_fixture(grid, eos);
  if (name == "constant") return constant_fixture(grid, eos);
  if (name == "plane-wave") return plane_wave_fixture(grid, eos);
  if (name == "irrotational") return irrotational_fixture(grid, eos);
  throw ConfigError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace eulerform
