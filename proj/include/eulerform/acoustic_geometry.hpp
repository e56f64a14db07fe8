#pragma once

#include <array>
#include <span>

#include <Eigen/Dense>

#include "eulerform/eos.hpp"
#include "eulerform/fluid_state.hpp"

namespace eulerform {

using Vec3 = std::array<double, 3>;

/// Acoustical metric and its inverse at one spacetime point, in Cartesian
/// components with index 0 for t.
struct MetricPoint {
  Eigen::Matrix4d g;
  Eigen::Matrix4d g_inv;
  double c = 1.0;
  Vec3 v{};
};

/// g_00 = -1 + |v|^2/c^2, g_0a = -v^a/c^2, g_ab = delta_ab/c^2, and
/// g^00 = -1, g^0a = -v^a, g^ab = c^2 delta^ab - v^a v^b.
/// Throws DomainError if c <= 0 or is not finite.
MetricPoint metric_at(double c, const Vec3& v);
MetricPoint metric_at(const EosPoint& eos_point, const Vec3& v);

/// The inverse assembled from -B (x) B + c^2 sum_a d_a (x) d_a.
Eigen::Matrix4d inverse_metric_dyadic(const MetricPoint& point);

struct TransportVectorReport {
  double g_BB = 0.0;         // expected -1
  Vec3 g_B_partial{};        // expected 0
  double max_error = 0.0;    // max(|g_BB + 1|, |g_B_partial|)
  bool future_directed = true;
};

/// g(B, B) and g(B, d_i) for B = (1, v^1, v^2, v^3).
TransportVectorReport check_transport_vector(const MetricPoint& point);

struct MetricInvariants {
  double inverse_error = 0.0;  // max |g_inv * g - I|
  double det_error = 0.0;      // |det g + c^-6|
  double transport_error = 0.0;
};

MetricInvariants metric_invariants(const MetricPoint& point);

/// Covariant wave operator on a per-slice scalar, evaluated at the middle slice
/// from the expanded Cartesian identity
///   -BBf + c^2 lap f + 2 c^-1 c_rho (B rho) Bf - (div v) Bf
///   - c^-1 c_rho g^-1(d rho, d f) - c c_s S.grad f + 3 c^-1 c_s (B s) Bf.
ScalarField box_g(const SliceStack& stack, std::span<const ScalarField> f);

/// Independent evaluation of the same operator from the divergence form
/// c^3 d_alpha (c^-3 g^{alpha beta} d_beta f). Needs at least 9 slices so every
/// time difference is centred.
ScalarField box_g_divergence_form(const SliceStack& stack, std::span<const ScalarField> f);

}  // namespace eulerform
