#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

namespace eulerform {

enum class EosKind { polytropic, chaplygin, custom };

/// Pressure, sound speed and their state-space derivatives at one point
/// (rho_log, s). Derivatives with respect to the logarithmic density are
/// taken at fixed entropy and vice versa.
struct EosPoint {
  double p = 0.0;
  double p_rho = 0.0;    // p_{;rho}
  double c = 0.0;        // sound speed
  double p_s = 0.0;      // p_{;s}
  double p_s_rho = 0.0;  // p_{;s;rho}
  double p_s_s = 0.0;    // p_{;s;s}
  double p_rho_s = 0.0;  // p_{;rho;s}, equal to p_s_rho
  double c_rho = 0.0;
  double c_s = 0.0;
};

/// Equation of state p(rho_log, s) with background density rho_bar.
///
/// Built-in models have closed-form derivatives:
///   polytropic: p = rho_bar * exp(gamma*rho) * exp(entropy_scale*s) / gamma
///   chaplygin:  p = C0 - C1 * exp(-rho) / rho_bar
/// The custom model takes a pressure closure and obtains every derivative by
/// (nested) central differences with step `fd_step`; second derivatives are
/// accurate to O(fd_step^2) with a roundoff floor near eps/fd_step^2.
///
/// Immutable after construction; evaluate() is safe to call concurrently.
class EosModel {
 public:
  using PressureFn = std::function<double(double rho_log, double s)>;

  static EosModel polytropic(double gamma, double background_density = 1.0,
                             double entropy_scale = 1.0);
  static EosModel chaplygin(double c0, double c1, double background_density = 1.0);
  static EosModel custom(PressureFn pressure, double background_density = 1.0,
                         double fd_step = 1e-4);

  EosPoint evaluate(double rho_log, double s) const;

  /// Sound speed only; cheaper than evaluate() for the built-in models.
  double sound_speed(double rho_log, double s) const;

  EosKind kind() const { return kind_; }
  double background_density() const { return rho_bar_; }
  const std::map<std::string, double>& params() const { return params_; }
  double param(const std::string& key) const;
  /// True when p does not depend on s (p_{;s} identically zero).
  bool barotropic() const { return kind_ == EosKind::chaplygin; }
  std::string name() const;

 private:
  EosModel() = default;
  EosPoint evaluate_custom(double rho_log, double s) const;

  EosKind kind_ = EosKind::polytropic;
  double rho_bar_ = 1.0;
  std::map<std::string, double> params_;
  // Hot-path copies of the model parameters: (gamma, entropy_scale) or (C0, C1).
  double a_ = 0.0;
  double b_ = 0.0;
  std::shared_ptr<const PressureFn> pressure_;
  double fd_step_ = 1e-4;
};

struct DerivativeCheck {
  double max_rel_error = 0.0;
  std::string worst_field;
};

/// Compares every derivative field of EosPoint with second-order central
/// differences of p and c at step h. Relative errors use max(|exact|, 1e-300)
/// in the denominator, and a field whose exact value and difference quotient
/// are both zero contributes exactly 0.
DerivativeCheck verify_derivatives(const EosModel& model, double rho_log, double s,
                                   double h);

}  // namespace eulerform
