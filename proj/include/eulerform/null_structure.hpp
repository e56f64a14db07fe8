#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "eulerform/acoustic_geometry.hpp"

namespace eulerform {

/// Number of entries of the unknown array: rho, v^1..v^3, s, Omega^1..3, S^1..3.
inline constexpr int kUnknowns = 11;
using StateArray = std::array<double, kUnknowns>;
/// Cartesian spacetime gradient of every unknown: dV(alpha, Theta).
using StateGradient = Eigen::Matrix<double, 4, kUnknowns>;

/// g-null frame {e1, e2, uL, L} at one point, Cartesian components.
struct NullFrame {
  Eigen::Vector4d L;
  Eigen::Vector4d uL;
  Eigen::Vector4d e1;
  Eigen::Vector4d e2;
  MetricPoint metric;

  /// Vector e_A with A = 0, 1, 2, 3 standing for e1, e2, uL, L.
  const Eigen::Vector4d& member(int A) const;
};

/// L = B + c n, uL = B - c n, e_A = c m_A with {n, m_1, m_2} Euclidean
/// orthonormal. Throws UsageError if |n_hat| differs from 1 by more than 1e-10.
NullFrame build_null_frame(const MetricPoint& point, const Vec3& n_hat);

/// Largest deviation among g(L,L), g(uL,uL), g(L,uL)+2, g(L,e_A), g(uL,e_A),
/// g(e_A,e_B) - delta_AB.
double frame_relation_residual(const NullFrame& frame);

/// M(alpha, A) with d_alpha = sum_A M(alpha, A) e_A, columns ordered
/// e1, e2, uL, L.
struct FrameCoefficients {
  Eigen::Matrix4d M;
  double condition_number = 1.0;
  /// max_{alpha,beta} |sum_A M(alpha,A) e_A^beta - delta_alpha^beta|
  double reconstruction_error = 0.0;
};

/// Solves the 4x4 system; throws NumericError when the frame matrix is
/// numerically singular (condition number above 1e12).
FrameCoefficients frame_coefficients(const NullFrame& frame);

double null_form_qg(const MetricPoint& point, const Eigen::Vector4d& dphi,
                    const Eigen::Vector4d& dpsi);
/// d_alpha phi d_beta psi - d_alpha psi d_beta phi.
double null_form_qab(int alpha, int beta, const Eigen::Vector4d& dphi,
                     const Eigen::Vector4d& dpsi);

/// -1/2 L(x)uL - 1/2 uL(x)L + e1(x)e1 + e2(x)e2.
Eigen::Matrix4d decompose_inverse_metric(const NullFrame& frame);

/// Coefficient tensor f(V)^{alpha beta}_{Theta Gamma} of a quadratic form in dV,
/// stored flat with `at(alpha, beta, Theta, Gamma)`.
class QuadraticCoefficients {
 public:
  QuadraticCoefficients() : data_(4 * 4 * kUnknowns * kUnknowns, 0.0) {}
  double& at(int alpha, int beta, int theta, int gamma) {
    return data_[((alpha * 4 + beta) * kUnknowns + theta) * kUnknowns + gamma];
  }
  double at(int alpha, int beta, int theta, int gamma) const {
    return data_[((alpha * 4 + beta) * kUnknowns + theta) * kUnknowns + gamma];
  }
  /// Largest violation of f^{ab}_{TG} = f^{ba}_{GT}.
  double symmetry_defect() const;

 private:
  std::vector<double> data_;
};

/// A derivative-quadratic term N = f(V)^{alpha beta}_{Theta Gamma} d_alpha V^Theta d_beta V^Gamma.
struct QuadraticTerm {
  std::string name;
  std::function<QuadraticCoefficients(const StateArray& V)> coeff;
};

/// Evaluates the term directly in Cartesian components.
double evaluate_quadratic(const QuadraticCoefficients& f, const StateGradient& dV);

/// Q^g(d V^a, d V^b) symmetrised over the unknown indices.
QuadraticTerm qg_term(const EosModel& eos, int theta, int gamma);
/// Q_(alpha beta)(d V^a, d V^b) for one coordinate pair.
QuadraticTerm qab_term(int alpha, int beta, int theta, int gamma);
/// (d_t V^theta)^2, a form that is not null.
QuadraticTerm dt_squared_term(int theta);

struct StrongNullReport {
  double diag_uLuL = 0.0;
  double diag_LL = 0.0;
  /// |frame expansion - Cartesian value| for the supplied gradient.
  double expansion_error = 0.0;
  bool pass = false;
};

/// Frame-contracted diagonal coefficients max|f M_.^uL M_.^uL| and
/// max|f M_.^L M_.^L|; passes when both are at most `tol`.
StrongNullReport strong_null_check(const QuadraticTerm& term, const NullFrame& frame,
                                   const StateArray& V, const StateGradient& dV,
                                   double tol = 1e-10);

/// The 26 unit vectors pointing from a cube centre to its face, edge and
/// corner neighbours.
std::vector<Vec3> cube_directions();

}  // namespace eulerform
