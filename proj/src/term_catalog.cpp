#include "eulerform/term_catalog.hpp"

#include <cmath>

#include "eulerform/errors.hpp"

namespace eulerform {

std::string_view equation_name(Equation eq) {
  switch (eq) {
    case Equation::wave_v: return "wave_v";
    case Equation::wave_rho: return "wave_rho";
    case Equation::transport_omega: return "transport_omega";
    case Equation::transport_s: return "transport_s";
    case Equation::transport_S: return "transport_S";
    case Equation::div_omega: return "div_omega";
    case Equation::transport_C: return "transport_C";
    case Equation::transport_D: return "transport_D";
    case Equation::curl_S: return "curl_S";
  }
  return "?";
}

int equation_components(Equation eq) {
  switch (eq) {
    case Equation::wave_rho:
    case Equation::transport_s:
    case Equation::div_omega:
    case Equation::transport_D: return 1;
    default: return 3;
  }
}

std::string_view term_class_name(TermClass c) {
  switch (c) {
    case TermClass::i: return "i";
    case TermClass::ii: return "ii";
    case TermClass::iii: return "iii";
  }
  return "?";
}

namespace terms {
namespace {

// exp(-3 rho) c^-2 p_s / rho_bar
double entropy_coupling(const CellJet& j) {
  return std::exp(-3.0 * j.rho()) / (j.c() * j.c()) * j.ps();
}

// exp(-3 rho) c^-3 c_rho p_s / rho_bar
double entropy_coupling_crho(const CellJet& j) {
  return std::exp(-3.0 * j.rho()) / (j.c() * j.c() * j.c()) * j.eos.c_rho * j.ps();
}

// exp(-3 rho) c^-2 p_s_rho / rho_bar
double entropy_coupling_psr(const CellJet& j) {
  return std::exp(-3.0 * j.rho()) / (j.c() * j.c()) * j.psr();
}

double S_squared(const CellJet& j) { return j.S(0) * j.S(0) + j.S(1) * j.S(1) + j.S(2) * j.S(2); }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 Bv_vec(const CellJet& j) { return {j.Bv(0), j.Bv(1), j.Bv(2)}; }
Vec3 omega_vec(const CellJet& j) { return {j.omega(0), j.omega(1), j.omega(2)}; }
Vec3 S_vec(const CellJet& j) { return {j.S(0), j.S(1), j.S(2)}; }

// d_a v^b d_b v^a
double dv_dv_swapped(const CellJet& j) {
  double sum = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) sum += j.dv(b, a) * j.dv(a, b);
  return sum;
}

// (S.grad rho) B v^i - (B rho) S.grad v^i
double S_rho_bracket(const CellJet& j, int i) {
  return j.S_dot_grad(var::rho) * j.Bv(i) - j.Brho() * j.S_dot_grad(var::v + i);
}

// (div v) B rho - (B v^a) d_a rho
double div_Brho_bracket(const CellJet& j) {
  double Bv_drho = 0.0;
  for (int a = 0; a < 3; ++a) Bv_drho += j.Bv(a) * j.drho(a);
  return j.div_v() * j.Brho() - Bv_drho;
}

}  // namespace

Vec3 wave_v_curl_mod(const CellJet& j) {
  const Vec3 C = j.curl_mod();
  const double w = -j.c() * j.c() * std::exp(2.0 * j.rho());
  return {w * C[0], w * C[1], w * C[2]};
}

Vec3 q_v(const CellJet& j) {
  const double w = -(1.0 + j.eos.c_rho / j.c());
  Vec3 out{};
  for (int i = 0; i < 3; ++i) out[i] = w * j.ginv(var::rho, var::v + i);
  return out;
}

Vec3 l_v_vorticity(const CellJet& j) {
  const Vec3 x = cross(Bv_vec(j), omega_vec(j));
  const double w = 2.0 * std::exp(j.rho());
  return {w * x[0], w * x[1], w * x[2]};
}

Vec3 l_v_omega_S(const CellJet& j) {
  const Vec3 x = cross(omega_vec(j), S_vec(j));
  const double w = -j.ps();
  return {w * x[0], w * x[1], w * x[2]};
}

Vec3 l_v_S_grad_v_psr(const CellJet& j) {
  const double w = -0.5 * std::exp(-j.rho()) * j.psr();
  return {w * j.S_dot_grad(var::v), w * j.S_dot_grad(var::v + 1), w * j.S_dot_grad(var::v + 2)};
}

Vec3 l_v_Brho_S(const CellJet& j) {
  const double w = -2.0 * std::exp(-j.rho()) * j.eos.c_rho / j.c() * j.ps() * j.Brho();
  return {w * j.S(0), w * j.S(1), w * j.S(2)};
}

Vec3 l_v_Brho_S_psr(const CellJet& j) {
  const double w = std::exp(-j.rho()) * j.psr() * j.Brho();
  return {w * j.S(0), w * j.S(1), w * j.S(2)};
}

double wave_rho_div_mod(const CellJet& j) { return -std::exp(j.rho()) * j.ps() * j.div_mod(); }

double q_rho_metric(const CellJet& j) {
  return -3.0 * j.eos.c_rho / j.c() * j.ginv(var::rho, var::rho);
}

double q_rho_div(const CellJet& j) { return j.div_v() * j.div_v() - dv_dv_swapped(j); }

// The coefficient is -5/2: -2 from differentiating the momentum equation and
// -1/2 from the -c c_s S.grad rho part of the wave operator (2 c c_s = exp(-rho) p_s_rho).
double l_rho_S_grad_rho(const CellJet& j) {
  return -2.5 * std::exp(-j.rho()) * j.psr() * j.S_dot_grad(var::rho);
}

double l_rho_S_squared(const CellJet& j) { return -std::exp(-j.rho()) * j.pss() * S_squared(j); }

Vec3 l_omega_stretch(const CellJet& j) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a) out[i] += j.omega(a) * j.dv(i, a);
  return out;
}

Vec3 l_omega_baroclinic(const CellJet& j) {
  const Vec3 x = cross(Bv_vec(j), S_vec(j));
  const double w = -std::exp(-2.0 * j.rho()) / (j.c() * j.c()) * j.ps();
  return {w * x[0], w * x[1], w * x[2]};
}

Vec3 l_S_grad_v(const CellJet& j) {
  return {-j.S_dot_grad(var::v), -j.S_dot_grad(var::v + 1), -j.S_dot_grad(var::v + 2)};
}

Vec3 l_S_omega(const CellJet& j) {
  const Vec3 x = cross(omega_vec(j), S_vec(j));
  const double w = std::exp(j.rho());
  return {w * x[0], w * x[1], w * x[2]};
}

double l_divomega(const CellJet& j) {
  double sum = 0.0;
  for (int a = 0; a < 3; ++a) sum += j.omega(a) * j.drho(a);
  return -sum;
}

Vec3 bc_vorticity_1(const CellJet& j) {
  // -2 eps_iab exp(-rho) sum_k (d_a v^k) d_b Omega^k
  Vec3 out{};
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const int e = levi_civita(i, a, b);
        if (e == 0) continue;
        for (int k = 0; k < 3; ++k) out[i] += e * j.dv(k, a) * j.domega(k, b);
      }
  const double w = -2.0 * std::exp(-j.rho());
  return {w * out[0], w * out[1], w * out[2]};
}

Vec3 bc_vorticity_2(const CellJet& j) {
  // eps_ajk exp(-rho) (d_a v^i) d_j Omega^k
  double curl_part[3] = {};  // eps_ajk d_j Omega^k = (curl Omega)^a
  for (int a = 0; a < 3; ++a) curl_part[a] = j.curl_omega(a);
  Vec3 out{};
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a) out[i] += j.dv(i, a) * curl_part[a];
  const double w = std::exp(-j.rho());
  return {w * out[0], w * out[1], w * out[2]};
}

Vec3 bc_entropy_1(const CellJet& j) {
  const double K = entropy_coupling(j);
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    double BS_dv = 0.0;
    for (int a = 0; a < 3; ++a) BS_dv += j.BS(a) * j.dv(i, a);
    out[i] = K * (BS_dv - j.Bv(i) * j.div_S());
  }
  return out;
}

Vec3 bc_entropy_2(const CellJet& j) {
  const double K = entropy_coupling(j);
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    double Bv_dS = 0.0;
    for (int a = 0; a < 3; ++a) Bv_dS += j.Bv(a) * j.dS(i, a);
    out[i] = K * (Bv_dS - j.div_v() * j.BS(i));
  }
  return out;
}

Vec3 q_C_line(int line, const CellJet& j) {
  const double K = entropy_coupling(j);
  const double Kc = entropy_coupling_crho(j);
  const double Kr = entropy_coupling_psr(j);
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    switch (line) {
      case 1: out[i] = K * j.S(i) * (dv_dv_swapped(j) - j.div_v() * j.div_v()); break;
      case 2: {
        double S_dv_dv = 0.0;  // (S^a d_a v^b) d_b v^i
        for (int b = 0; b < 3; ++b) S_dv_dv += j.S_dot_grad(var::v + b) * j.dv(i, b);
        out[i] = K * (j.div_v() * j.S_dot_grad(var::v + i) - S_dv_dv);
        break;
      }
      case 3: out[i] = 2.0 * K * S_rho_bracket(j, i); break;
      case 4: out[i] = 2.0 * Kc * S_rho_bracket(j, i); break;
      case 5: out[i] = -Kr * S_rho_bracket(j, i); break;
      case 6: out[i] = -Kr * j.S(i) * div_Brho_bracket(j); break;
      case 7: out[i] = 2.0 * K * j.S(i) * div_Brho_bracket(j); break;
      case 8: out[i] = 2.0 * Kc * j.S(i) * div_Brho_bracket(j); break;
      default: throw UsageError("Q_C has lines 1..8");
    }
  }
  return out;
}

// The p_s_s pair enters with the sign of -exp(-3 rho) c^-2 (p_s_s / rho_bar)
// (Bv |S|^2 - (S.Bv) S), which is what the curl of the baroclinic term in the
// Omega transport equation produces.
Vec3 l_C_term(int term, const CellJet& j) {
  const double e3 = std::exp(-3.0 * j.rho());
  const double c = j.c();
  const double S2 = S_squared(j);
  double S_Bv = 0.0;
  for (int a = 0; a < 3; ++a) S_Bv += j.S(a) * j.Bv(a);
  const double w_cs = 2.0 * e3 / (c * c * c) * j.eos.c_s * j.ps();
  const double w_pss = e3 / (c * c) * j.pss();
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    switch (term) {
      case 1: out[i] = w_cs * j.Bv(i) * S2; break;
      case 2: out[i] = -w_cs * S_Bv * j.S(i); break;
      case 3: out[i] = -w_pss * j.Bv(i) * S2; break;
      case 4: out[i] = w_pss * S_Bv * j.S(i); break;
      default: throw UsageError("L_C has terms 1..4");
    }
  }
  return out;
}

double bd_null(const CellJet& j) {
  double dv_dS = 0.0;  // (d_a v^b) d_b S^a
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) dv_dS += j.dv(b, a) * j.dS(a, b);
  return 2.0 * std::exp(-2.0 * j.rho()) * (j.div_v() * j.div_S() - dv_dS);
}

double bd_curl_omega(const CellJet& j) {
  double sum = 0.0;
  for (int a = 0; a < 3; ++a) sum += j.curl_omega(a) * j.S(a);
  return std::exp(-j.rho()) * sum;
}

double q_D(const CellJet& j) {
  double S_dv_drho = 0.0;  // (S^a d_a v^b) d_b rho
  for (int b = 0; b < 3; ++b) S_dv_drho += j.S_dot_grad(var::v + b) * j.drho(b);
  return 2.0 * std::exp(-2.0 * j.rho()) * (S_dv_drho - j.div_v() * j.S_dot_grad(var::rho));
}

Vec3 transport_omega_rhs(const CellJet& j) {
  const Vec3 a = l_omega_stretch(j);
  const Vec3 b = l_omega_baroclinic(j);
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 transport_S_rhs(const CellJet& j) {
  const Vec3 a = l_S_grad_v(j);
  const Vec3 b = l_S_omega(j);
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

}  // namespace terms

namespace {

std::function<Vec3(const CellJet&)> scalar(double (*f)(const CellJet&)) {
  return [f](const CellJet& j) { return Vec3{f(j), 0.0, 0.0}; };
}

std::vector<TermEntry> build_catalog() {
  using E = Equation;
  using C = TermClass;
  using G = SourceGroup;
  std::vector<TermEntry> t;
  auto add = [&](std::string id, E eq, C cls, G group, std::string diff, bool ent,
                 std::function<Vec3(const CellJet&)> f) {
    const double expo = cls == C::i ? 0.0 : 1.0;
    t.push_back({std::move(id), eq, cls, group, std::move(diff), expo, ent, std::move(f)});
  };

  add("wave_v.curl_mod", E::wave_v, C::ii, G::none, "v,omega", false, terms::wave_v_curl_mod);
  add("wave_v.q_v", E::wave_v, C::iii, G::q_v, "rho,v", false, terms::q_v);
  add("wave_v.l_vorticity", E::wave_v, C::ii, G::l_v, "v", false, terms::l_v_vorticity);
  add("wave_v.l_omega_S", E::wave_v, C::i, G::l_v, "", true, terms::l_v_omega_S);
  add("wave_v.l_S_grad_v_psr", E::wave_v, C::ii, G::l_v, "v", true, terms::l_v_S_grad_v_psr);
  add("wave_v.l_Brho_S", E::wave_v, C::ii, G::l_v, "rho", true, terms::l_v_Brho_S);
  add("wave_v.l_Brho_S_psr", E::wave_v, C::ii, G::l_v, "rho", true, terms::l_v_Brho_S_psr);

  add("wave_rho.div_mod", E::wave_rho, C::ii, G::none, "rho,S", true, scalar(terms::wave_rho_div_mod));
  add("wave_rho.q_metric", E::wave_rho, C::iii, G::q_rho, "rho", false, scalar(terms::q_rho_metric));
  add("wave_rho.q_div", E::wave_rho, C::iii, G::q_rho, "v", false, scalar(terms::q_rho_div));
  add("wave_rho.l_S_grad_rho", E::wave_rho, C::ii, G::l_rho, "rho", true, scalar(terms::l_rho_S_grad_rho));
  add("wave_rho.l_S_squared", E::wave_rho, C::i, G::l_rho, "", true, scalar(terms::l_rho_S_squared));

  add("transport_omega.l_stretch", E::transport_omega, C::ii, G::l_omega, "v", false, terms::l_omega_stretch);
  add("transport_omega.l_baroclinic", E::transport_omega, C::ii, G::l_omega, "v", true,
      terms::l_omega_baroclinic);

  add("transport_S.l_grad_v", E::transport_S, C::ii, G::l_S, "v", false, terms::l_S_grad_v);
  add("transport_S.l_omega", E::transport_S, C::i, G::l_S, "", false, terms::l_S_omega);

  add("div_omega.l_divomega", E::div_omega, C::ii, G::l_divomega, "rho", false, scalar(terms::l_divomega));

  add("transport_C.vorticity_1", E::transport_C, C::iii, G::none, "v,omega", false, terms::bc_vorticity_1);
  add("transport_C.vorticity_2", E::transport_C, C::iii, G::none, "v,omega", false, terms::bc_vorticity_2);
  add("transport_C.entropy_1", E::transport_C, C::iii, G::none, "v,S", true, terms::bc_entropy_1);
  add("transport_C.entropy_2", E::transport_C, C::iii, G::none, "v,S", true, terms::bc_entropy_2);
  for (int line = 1; line <= 8; ++line) {
    const std::string diff = line <= 2 ? "v" : "rho,v";
    add("transport_C.q_C_" + std::to_string(line), E::transport_C, C::iii, G::q_C, diff, true,
        [line](const CellJet& j) { return terms::q_C_line(line, j); });
  }
  for (int k = 1; k <= 4; ++k) {
    add("transport_C.l_C_" + std::to_string(k), E::transport_C, C::ii, G::l_C, "v", true,
        [k](const CellJet& j) { return terms::l_C_term(k, j); });
  }

  add("transport_D.null", E::transport_D, C::iii, G::none, "v,S", false, scalar(terms::bd_null));
  add("transport_D.curl_omega", E::transport_D, C::ii, G::none, "omega", false,
      scalar(terms::bd_curl_omega));
  add("transport_D.q_D", E::transport_D, C::iii, G::q_D, "rho,v", false, scalar(terms::q_D));
  return t;
}

}  // namespace

const std::vector<TermEntry>& term_catalog() {
  static const std::vector<TermEntry> catalog = build_catalog();
  return catalog;
}

Vec3 equation_rhs(Equation eq, const CellJet& j) {
  Vec3 sum{};
  for (const auto& t : term_catalog()) {
    if (t.equation != eq) continue;
    const Vec3 x = t.eval(j);
    for (int i = 0; i < 3; ++i) sum[i] += x[i];
  }
  return sum;
}

Vec3 group_sum(SourceGroup group, const CellJet& j) {
  Vec3 sum{};
  for (const auto& t : term_catalog()) {
    if (t.group != group) continue;
    const Vec3 x = t.eval(j);
    for (int i = 0; i < 3; ++i) sum[i] += x[i];
  }
  return sum;
}

}  // namespace eulerform
