#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "eulerform/eos.hpp"
#include "eulerform/fluid_state.hpp"
#include "eulerform/null_structure.hpp"

namespace eulerform {

/// Positions in the unknown array.
namespace var {
inline constexpr int rho = 0;
inline constexpr int v = 1;      // v^1..v^3 at 1..3
inline constexpr int s = 4;
inline constexpr int omega = 5;  // 5..7
inline constexpr int S = 8;      // 8..10
}  // namespace var

/// Everything a source term needs at one cell: the unknowns, their material
/// derivatives, their spatial gradients and the EOS point.
struct CellJet {
  StateArray V{};
  StateArray BV{};
  std::array<Vec3, kUnknowns> dV{};  // dV[Theta][a] = d_a V^Theta
  EosPoint eos;
  double rho_bar = 1.0;

  double rho() const { return V[var::rho]; }
  double c() const { return eos.c; }
  double ps() const { return eos.p_s / rho_bar; }
  double psr() const { return eos.p_s_rho / rho_bar; }
  double pss() const { return eos.p_s_s / rho_bar; }

  double v(int i) const { return V[var::v + i]; }
  double omega(int i) const { return V[var::omega + i]; }
  double S(int i) const { return V[var::S + i]; }
  double Bv(int i) const { return BV[var::v + i]; }
  double BS(int i) const { return BV[var::S + i]; }
  double Brho() const { return BV[var::rho]; }
  double dv(int i, int a) const { return dV[var::v + i][a]; }
  double domega(int i, int a) const { return dV[var::omega + i][a]; }
  double dS(int i, int a) const { return dV[var::S + i][a]; }
  double drho(int a) const { return dV[var::rho][a]; }

  double div_v() const { return dv(0, 0) + dv(1, 1) + dv(2, 2); }
  double div_S() const { return dS(0, 0) + dS(1, 1) + dS(2, 2); }
  double curl_omega(int i) const;
  /// S^a d_a V^Theta
  double S_dot_grad(int theta) const;
  /// g^-1(dV^a, dV^b) = -(B V^a)(B V^b) + c^2 grad V^a . grad V^b
  double ginv(int theta, int gamma) const;

  /// The modified variables evaluated from the jet.
  Vec3 curl_mod() const;
  double div_mod() const;
};

/// Jets at every cell of the middle slice of a stack. Material derivatives of
/// all eleven unknowns come from the stack's time differences.
class StackJets {
 public:
  explicit StackJets(const SliceStack& stack);

  std::size_t size() const { return size_; }
  CellJet at(std::size_t q) const;
  const FluidState& state() const { return *state_; }

  /// Per-slice C and D, needed for their material derivatives.
  const std::vector<DerivedState>& derived_slices() const { return derived_; }
  const DerivedState& derived_middle() const { return derived_[derived_.size() / 2]; }

 private:
  const FluidState* state_;
  std::size_t size_ = 0;
  std::vector<DerivedState> derived_;
  std::array<ScalarField, kUnknowns> value_;
  std::array<ScalarField, kUnknowns> material_;
  std::array<VectorField, kUnknowns> grad_;
};

/// Jets of a single slice with Omega and S taken from `derived` and every
/// material derivative replaced by the first-order equations:
/// B rho = -div v, B v from the momentum equation, B s = 0, and
/// B Omega, B S from their transport equations.
class SliceJets {
 public:
  SliceJets(const FluidState& state, const DerivedState& derived);
  std::size_t size() const { return value_[0].size(); }
  CellJet at(std::size_t q) const;

 private:
  const FluidState* state_;
  std::array<ScalarField, kUnknowns> value_;
  std::array<VectorField, kUnknowns> grad_;
};

/// Jet at a point from the unknowns and their Cartesian spacetime gradient.
CellJet jet_from_gradient(const StateArray& V, const StateGradient& dV, const EosModel& eos);

}  // namespace eulerform
