#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eulerform/cell_jet.hpp"

namespace eulerform {

/// The equations of the wave-transport-divergence-curl system, in the order
/// they are reported.
enum class Equation {
  wave_v,
  wave_rho,
  transport_omega,
  transport_s,
  transport_S,
  div_omega,
  transport_C,
  transport_D,
  curl_S,
};

inline constexpr Equation kAllEquations[] = {
    Equation::wave_v,      Equation::wave_rho,    Equation::transport_omega,
    Equation::transport_s, Equation::transport_S, Equation::div_omega,
    Equation::transport_C, Equation::transport_D, Equation::curl_S};

std::string_view equation_name(Equation eq);
/// 1 for scalar equations, 3 for vector equations.
int equation_components(Equation eq);

/// (i): f(V) vanishing when S = Omega = 0; (ii): linear in dV; (iii): f(V)
/// times a standard null form.
enum class TermClass { i, ii, iii };
std::string_view term_class_name(TermClass c);

/// Named source groups that the terms are collected into.
enum class SourceGroup { none, q_v, q_rho, q_C, q_D, l_v, l_rho, l_omega, l_S, l_divomega, l_C };

struct TermEntry {
  std::string id;
  Equation equation;
  TermClass cls;
  SourceGroup group;
  std::string differentiates;  // comma-separated unknowns appearing under d
  double expected_exponent;    // frequency scaling of the term in a differentiated unknown
  bool entropy_coupled;        // carries a factor p_s, p_s_rho, p_s_s or c_s
  std::function<Vec3(const CellJet&)> eval;  // scalar terms use component 0
};

/// Every right-hand-side term of the system, each exactly once.
const std::vector<TermEntry>& term_catalog();

/// Sum of all catalog terms belonging to `eq` (component 0 for scalars).
Vec3 equation_rhs(Equation eq, const CellJet& j);
/// Sum of all catalog terms in `group`.
Vec3 group_sum(SourceGroup group, const CellJet& j);

namespace terms {

// Velocity wave equation.
Vec3 wave_v_curl_mod(const CellJet& j);
Vec3 q_v(const CellJet& j);
Vec3 l_v_vorticity(const CellJet& j);
Vec3 l_v_omega_S(const CellJet& j);
Vec3 l_v_S_grad_v_psr(const CellJet& j);
Vec3 l_v_Brho_S(const CellJet& j);
Vec3 l_v_Brho_S_psr(const CellJet& j);

// Density wave equation.
double wave_rho_div_mod(const CellJet& j);
double q_rho_metric(const CellJet& j);
double q_rho_div(const CellJet& j);
double l_rho_S_grad_rho(const CellJet& j);
double l_rho_S_squared(const CellJet& j);

// Transport and divergence.
Vec3 l_omega_stretch(const CellJet& j);
Vec3 l_omega_baroclinic(const CellJet& j);
Vec3 l_S_grad_v(const CellJet& j);
Vec3 l_S_omega(const CellJet& j);
double l_divomega(const CellJet& j);

// Transport of C: the explicit products, then the eight Q_C lines and the
// four L_C terms.
Vec3 bc_vorticity_1(const CellJet& j);
Vec3 bc_vorticity_2(const CellJet& j);
Vec3 bc_entropy_1(const CellJet& j);
Vec3 bc_entropy_2(const CellJet& j);
Vec3 q_C_line(int line, const CellJet& j);  // line in 1..8
Vec3 l_C_term(int term, const CellJet& j);  // term in 1..4

// Transport of D.
double bd_null(const CellJet& j);
double bd_curl_omega(const CellJet& j);
double q_D(const CellJet& j);

/// L_(Omega) and L_(S), used when substituting material derivatives.
Vec3 transport_omega_rhs(const CellJet& j);
Vec3 transport_S_rhs(const CellJet& j);

}  // namespace terms
}  // namespace eulerform
