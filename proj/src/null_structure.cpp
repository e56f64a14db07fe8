#include "eulerform/null_structure.hpp"

#include <algorithm>
#include <cmath>

#include "eulerform/errors.hpp"

namespace eulerform {

const Eigen::Vector4d& NullFrame::member(int A) const {
  switch (A) {
    case 0: return e1;
    case 1: return e2;
    case 2: return uL;
    default: return L;
  }
}

NullFrame build_null_frame(const MetricPoint& point, const Vec3& n_hat) {
  const Eigen::Vector3d n(n_hat[0], n_hat[1], n_hat[2]);
  if (std::abs(n.norm() - 1.0) > 1e-10) throw UsageError("null frame direction must be a unit vector");

  // Completion from the coordinate axis least aligned with n.
  int axis = 0;
  for (int a = 1; a < 3; ++a) {
    if (std::abs(n(a)) < std::abs(n(axis))) axis = a;
  }
  Eigen::Vector3d m1 = Eigen::Vector3d::Unit(axis);
  m1 -= m1.dot(n) * n;
  m1.normalize();
  const Eigen::Vector3d m2 = n.cross(m1);

  const double c = point.c;
  NullFrame f;
  f.metric = point;
  const Eigen::Vector4d B(1.0, point.v[0], point.v[1], point.v[2]);
  Eigen::Vector4d N = Eigen::Vector4d::Zero();
  N.tail<3>() = c * n;
  f.L = B + N;
  f.uL = B - N;
  f.e1.setZero();
  f.e2.setZero();
  f.e1.tail<3>() = c * m1;
  f.e2.tail<3>() = c * m2;
  return f;
}

double frame_relation_residual(const NullFrame& f) {
  const Eigen::Matrix4d& g = f.metric.g;
  auto ip = [&](const Eigen::Vector4d& a, const Eigen::Vector4d& b) { return a.dot(g * b); };
  double r = std::max({std::abs(ip(f.L, f.L)), std::abs(ip(f.uL, f.uL)),
                       std::abs(ip(f.L, f.uL) + 2.0)});
  const Eigen::Vector4d* e[2] = {&f.e1, &f.e2};
  for (int A = 0; A < 2; ++A) {
    r = std::max({r, std::abs(ip(f.L, *e[A])), std::abs(ip(f.uL, *e[A]))});
    for (int B = 0; B < 2; ++B) r = std::max(r, std::abs(ip(*e[A], *e[B]) - (A == B ? 1.0 : 0.0)));
  }
  return r;
}

FrameCoefficients frame_coefficients(const NullFrame& frame) {
  // E(beta, A) = e_A^beta; d_alpha = sum_A M(alpha, A) e_A means M E^T = I.
  Eigen::Matrix4d E;
  for (int A = 0; A < 4; ++A) E.col(A) = frame.member(A);
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(E);
  const auto& sv = svd.singularValues();
  FrameCoefficients out;
  out.condition_number = sv(3) > 0.0 ? sv(0) / sv(3) : INFINITY;
  if (!(out.condition_number < 1e12)) {
    throw NumericError("degenerate null frame, condition number " +
                       std::to_string(out.condition_number));
  }
  out.M = E.transpose().partialPivLu().solve(Eigen::Matrix4d::Identity());
  out.reconstruction_error = (out.M * E.transpose() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff();
  return out;
}

double null_form_qg(const MetricPoint& point, const Eigen::Vector4d& dphi,
                    const Eigen::Vector4d& dpsi) {
  return dphi.dot(point.g_inv * dpsi);
}

double null_form_qab(int alpha, int beta, const Eigen::Vector4d& dphi,
                     const Eigen::Vector4d& dpsi) {
  return dphi(alpha) * dpsi(beta) - dpsi(alpha) * dphi(beta);
}

Eigen::Matrix4d decompose_inverse_metric(const NullFrame& f) {
  return -0.5 * f.L * f.uL.transpose() - 0.5 * f.uL * f.L.transpose() +
         f.e1 * f.e1.transpose() + f.e2 * f.e2.transpose();
}

double QuadraticCoefficients::symmetry_defect() const {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int t = 0; t < kUnknowns; ++t)
        for (int g = 0; g < kUnknowns; ++g)
          worst = std::max(worst, std::abs(at(a, b, t, g) - at(b, a, g, t)));
  return worst;
}

double evaluate_quadratic(const QuadraticCoefficients& f, const StateGradient& dV) {
  double sum = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int t = 0; t < kUnknowns; ++t)
        for (int g = 0; g < kUnknowns; ++g) sum += f.at(a, b, t, g) * dV(a, t) * dV(b, g);
  return sum;
}

namespace {

MetricPoint metric_from_state(const EosModel& eos, const StateArray& V) {
  return metric_at(eos.sound_speed(V[0], V[4]), Vec3{V[1], V[2], V[3]});
}

}  // namespace

QuadraticTerm qg_term(const EosModel& eos, int theta, int gamma) {
  return {"Q^g", [eos, theta, gamma](const StateArray& V) {
            const MetricPoint p = metric_from_state(eos, V);
            QuadraticCoefficients f;
            for (int a = 0; a < 4; ++a)
              for (int b = 0; b < 4; ++b) {
                f.at(a, b, theta, gamma) += 0.5 * p.g_inv(a, b);
                f.at(a, b, gamma, theta) += 0.5 * p.g_inv(a, b);
              }
            return f;
          }};
}

QuadraticTerm qab_term(int alpha, int beta, int theta, int gamma) {
  return {"Q_(" + std::to_string(alpha) + std::to_string(beta) + ")",
          [alpha, beta, theta, gamma](const StateArray&) {
            QuadraticCoefficients f;
            // phi = V^theta, psi = V^gamma, written symmetrically.
            f.at(alpha, beta, theta, gamma) += 0.5;
            f.at(beta, alpha, gamma, theta) += 0.5;
            f.at(alpha, beta, gamma, theta) -= 0.5;
            f.at(beta, alpha, theta, gamma) -= 0.5;
            return f;
          }};
}

QuadraticTerm dt_squared_term(int theta) {
  return {"(d_t phi)^2", [theta](const StateArray&) {
            QuadraticCoefficients f;
            f.at(0, 0, theta, theta) = 1.0;
            return f;
          }};
}

StrongNullReport strong_null_check(const QuadraticTerm& term, const NullFrame& frame,
                                   const StateArray& V, const StateGradient& dV, double tol) {
  const QuadraticCoefficients f = term.coeff(V);
  const FrameCoefficients fc = frame_coefficients(frame);
  const Eigen::Matrix4d& M = fc.M;

  StrongNullReport r;
  for (int t = 0; t < kUnknowns; ++t) {
    for (int g = 0; g < kUnknowns; ++g) {
      double d3 = 0.0, d4 = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          const double fab = f.at(a, b, t, g);
          if (fab == 0.0) continue;
          d3 += fab * M(a, 2) * M(b, 2);
          d4 += fab * M(a, 3) * M(b, 3);
        }
      r.diag_uLuL = std::max(r.diag_uLuL, std::abs(d3));
      r.diag_LL = std::max(r.diag_LL, std::abs(d4));
    }
  }

  // Frame expansion sum_{A,B} f M(.,A) M(.,B) (e_A V^t)(e_B V^g).
  Eigen::Matrix<double, 4, kUnknowns> frame_dV;
  for (int A = 0; A < 4; ++A) frame_dV.row(A) = frame.member(A).transpose() * dV;
  double expansion = 0.0;
  for (int t = 0; t < kUnknowns; ++t)
    for (int g = 0; g < kUnknowns; ++g) {
      Eigen::Matrix4d fm;
      bool any = false;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          fm(a, b) = f.at(a, b, t, g);
          any = any || fm(a, b) != 0.0;
        }
      if (!any) continue;
      const Eigen::Matrix4d frame_f = M.transpose() * fm * M;
      for (int A = 0; A < 4; ++A)
        for (int B = 0; B < 4; ++B) expansion += frame_f(A, B) * frame_dV(A, t) * frame_dV(B, g);
    }
  const double cartesian = evaluate_quadratic(f, dV);
  r.expansion_error = std::abs(expansion - cartesian);
  r.pass = r.diag_uLuL <= tol && r.diag_LL <= tol;
  return r;
}

std::vector<Vec3> cube_directions() {
  std::vector<Vec3> out;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      for (int k = -1; k <= 1; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        const double norm = std::sqrt(double(i * i + j * j + k * k));
        out.push_back({i / norm, j / norm, k / norm});
      }
  return out;
}

}  // namespace eulerform
