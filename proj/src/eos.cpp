#include "eulerform/eos.hpp"

#include <cmath>
#include <sstream>

#include "eulerform/errors.hpp"

namespace eulerform {

namespace {

void require_finite(double rho_log, double s) {
  if (!std::isfinite(rho_log) || !std::isfinite(s)) {
    throw DomainError("EOS evaluated at non-finite state");
  }
}

void require_background(double rho_bar) {
  if (!(rho_bar > 0.0) || !std::isfinite(rho_bar)) {
    throw ConfigError("background_density must be > 0");
  }
}

}  // namespace

EosModel EosModel::polytropic(double gamma, double background_density,
                              double entropy_scale) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) {
    throw ConfigError("polytropic EOS requires gamma > 1");
  }
  if (!std::isfinite(entropy_scale)) {
    throw ConfigError("polytropic entropy_scale must be finite");
  }
  require_background(background_density);
  EosModel m;
  m.kind_ = EosKind::polytropic;
  m.rho_bar_ = background_density;
  m.params_ = {{"gamma", gamma}, {"entropy_scale", entropy_scale}};
  m.a_ = gamma;
  m.b_ = entropy_scale;
  return m;
}

EosModel EosModel::chaplygin(double c0, double c1, double background_density) {
  if (!(c1 > 0.0) || !std::isfinite(c1) || !std::isfinite(c0)) {
    throw ConfigError("chaplygin EOS requires finite C0 and C1 > 0");
  }
  require_background(background_density);
  EosModel m;
  m.kind_ = EosKind::chaplygin;
  m.rho_bar_ = background_density;
  m.params_ = {{"C0", c0}, {"C1", c1}};
  m.a_ = c0;
  m.b_ = c1;
  return m;
}

EosModel EosModel::custom(PressureFn pressure, double background_density,
                          double fd_step) {
  if (!pressure) throw ConfigError("custom EOS requires a pressure function");
  if (!(fd_step > 0.0 && fd_step <= 0.1)) {
    throw ConfigError("custom EOS fd_step must lie in (0, 0.1]");
  }
  require_background(background_density);
  EosModel m;
  m.kind_ = EosKind::custom;
  m.rho_bar_ = background_density;
  m.pressure_ = std::make_shared<const PressureFn>(std::move(pressure));
  m.fd_step_ = fd_step;
  m.params_ = {{"fd_step", fd_step}};
  return m;
}

double EosModel::param(const std::string& key) const {
  auto it = params_.find(key);
  if (it == params_.end()) throw ConfigError("EOS has no parameter '" + key + "'");
  return it->second;
}

std::string EosModel::name() const {
  switch (kind_) {
    case EosKind::polytropic: return "polytropic";
    case EosKind::chaplygin: return "chaplygin";
    case EosKind::custom: return "custom";
  }
  return "unknown";
}

double EosModel::sound_speed(double rho_log, double s) const {
  require_finite(rho_log, s);
  switch (kind_) {
    case EosKind::polytropic: {
      const double gamma = a_;
      const double sigma = b_;
      return std::exp(0.5 * ((gamma - 1.0) * rho_log + sigma * s));
    }
    case EosKind::chaplygin:
      return std::sqrt(b_) * std::exp(-rho_log) / rho_bar_;
    case EosKind::custom:
      return evaluate_custom(rho_log, s).c;
  }
  return 0.0;
}

EosPoint EosModel::evaluate(double rho_log, double s) const {
  require_finite(rho_log, s);
  EosPoint e;
  switch (kind_) {
    case EosKind::polytropic: {
      const double gamma = a_;
      const double sigma = b_;
      const double E = std::exp(gamma * rho_log + sigma * s);
      e.p = rho_bar_ * E / gamma;
      e.p_rho = rho_bar_ * E;
      e.p_s = sigma * e.p;
      e.p_s_rho = sigma * rho_bar_ * E;
      e.p_rho_s = e.p_s_rho;
      e.p_s_s = sigma * sigma * e.p;
      // c^2 = exp(-rho) p_{;rho} / rho_bar = exp((gamma-1) rho + sigma s)
      e.c = std::exp(0.5 * ((gamma - 1.0) * rho_log + sigma * s));
      e.c_rho = 0.5 * (gamma - 1.0) * e.c;
      e.c_s = 0.5 * sigma * e.c;
      break;
    }
    case EosKind::chaplygin: {
      const double c0 = a_;
      const double c1 = b_;
      const double em = std::exp(-rho_log);
      e.p = c0 - c1 * em / rho_bar_;
      e.p_rho = c1 * em / rho_bar_;
      e.c = std::sqrt(c1) * em / rho_bar_;
      e.c_rho = -e.c;
      // barotropic: every s-derivative is exactly zero
      break;
    }
    case EosKind::custom:
      e = evaluate_custom(rho_log, s);
      break;
  }
  if (!(e.c > 0.0) || !std::isfinite(e.c)) {
    std::ostringstream os;
    os << "sound speed not positive at rho_log=" << rho_log << ", s=" << s;
    throw DomainError(os.str());
  }
  return e;
}

EosPoint EosModel::evaluate_custom(double rho_log, double s) const {
  const auto& p = *pressure_;
  const double h = fd_step_;
  EosPoint e;
  auto dp_rho = [&](double r, double ss) { return (p(r + h, ss) - p(r - h, ss)) / (2 * h); };
  auto dp_s = [&](double r, double ss) { return (p(r, ss + h) - p(r, ss - h)) / (2 * h); };
  auto speed = [&](double r, double ss) {
    const double c2 = std::exp(-r) * dp_rho(r, ss) / rho_bar_;
    return c2 > 0.0 ? std::sqrt(c2) : 0.0;
  };
  e.p = p(rho_log, s);
  e.p_rho = dp_rho(rho_log, s);
  e.p_s = dp_s(rho_log, s);
  e.p_s_rho = (dp_s(rho_log + h, s) - dp_s(rho_log - h, s)) / (2 * h);
  e.p_rho_s = e.p_s_rho;
  e.p_s_s = (p(rho_log, s + h) - 2 * e.p + p(rho_log, s - h)) / (h * h);
  e.c = speed(rho_log, s);
  e.c_rho = (speed(rho_log + h, s) - speed(rho_log - h, s)) / (2 * h);
  e.c_s = (speed(rho_log, s + h) - speed(rho_log, s - h)) / (2 * h);
  return e;
}

DerivativeCheck verify_derivatives(const EosModel& model, double rho_log, double s,
                                   double h) {
  if (!(h > 0.0 && h <= 0.1)) throw UsageError("verify_derivatives: h must lie in (0, 0.1]");
  const EosPoint e = model.evaluate(rho_log, s);
  auto p = [&](double r, double ss) { return model.evaluate(r, ss).p; };
  auto c = [&](double r, double ss) { return model.evaluate(r, ss).c; };
  const double rb = model.background_density();

  const double fd_p_rho = (p(rho_log + h, s) - p(rho_log - h, s)) / (2 * h);
  const double fd_p_s = (p(rho_log, s + h) - p(rho_log, s - h)) / (2 * h);
  const double fd_p_s_s = (p(rho_log, s + h) - 2 * e.p + p(rho_log, s - h)) / (h * h);
  const double fd_p_mixed = (p(rho_log + h, s + h) - p(rho_log + h, s - h) -
                             p(rho_log - h, s + h) + p(rho_log - h, s - h)) /
                            (4 * h * h);
  const double fd_c = std::sqrt(std::exp(-rho_log) * fd_p_rho / rb);
  const double fd_c_rho = (c(rho_log + h, s) - c(rho_log - h, s)) / (2 * h);
  const double fd_c_s = (c(rho_log, s + h) - c(rho_log, s - h)) / (2 * h);

  DerivativeCheck out;
  auto compare = [&](const char* name, double exact, double approx) {
    const double diff = std::abs(exact - approx);
    const double rel = diff == 0.0 ? 0.0 : diff / std::max(std::abs(exact), 1e-300);
    if (out.worst_field.empty() || rel > out.max_rel_error) {
      out.max_rel_error = rel;
      out.worst_field = name;
    }
  };
  compare("p_rho", e.p_rho, fd_p_rho);
  compare("p_s", e.p_s, fd_p_s);
  compare("p_s_s", e.p_s_s, fd_p_s_s);
  compare("p_s_rho", e.p_s_rho, fd_p_mixed);
  compare("p_rho_s", e.p_rho_s, fd_p_mixed);
  compare("c", e.c, fd_c);
  compare("c_rho", e.c_rho, fd_c_rho);
  compare("c_s", e.c_s, fd_c_s);
  return out;
}

}  // namespace eulerform
