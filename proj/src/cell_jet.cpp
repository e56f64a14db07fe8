#include "eulerform/cell_jet.hpp"

#include <cmath>

#include "eulerform/term_catalog.hpp"

namespace eulerform {

double CellJet::curl_omega(int i) const {
  double sum = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const int e = levi_civita(i, a, b);
      if (e != 0) sum += e * domega(b, a);
    }
  return sum;
}

double CellJet::S_dot_grad(int theta) const {
  return S(0) * dV[theta][0] + S(1) * dV[theta][1] + S(2) * dV[theta][2];
}

double CellJet::ginv(int theta, int gamma) const {
  double dot = 0.0;
  for (int a = 0; a < 3; ++a) dot += dV[theta][a] * dV[gamma][a];
  return -BV[theta] * BV[gamma] + c() * c() * dot;
}

Vec3 CellJet::curl_mod() const {
  const double r = rho();
  const double coupling = std::exp(-3.0 * r) / (c() * c()) * ps();
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    out[i] = std::exp(-r) * curl_omega(i) + coupling * S_dot_grad(var::v + i) -
             coupling * div_v() * S(i);
  }
  return out;
}

double CellJet::div_mod() const {
  const double r = rho();
  return std::exp(-2.0 * r) * div_S() - std::exp(-2.0 * r) * S_dot_grad(var::rho);
}

namespace {

std::vector<ScalarField> component_slices(const std::vector<DerivedState>& d, bool omega, int i) {
  std::vector<ScalarField> out;
  out.reserve(d.size());
  for (const auto& x : d) out.push_back(omega ? x.omega[i] : x.grad_ent[i]);
  return out;
}

}  // namespace

StackJets::StackJets(const SliceStack& stack) {
  stack.validate();
  state_ = &stack.middle();
  size_ = state_->grid().size();
  derived_.reserve(stack.slices.size());
  for (const auto& sl : stack.slices) derived_.push_back(compute_derived(sl));
  const DerivedState& dm = derived_middle();

  auto fill = [&](int theta, const ScalarField& value, std::span<const ScalarField> slices) {
    value_[theta] = value;
    material_[theta] = material_derivative(stack, slices);
    grad_[theta] = gradient(value);
  };
  fill(var::rho, state_->rho_log, slice_rho(stack));
  for (int i = 0; i < 3; ++i) fill(var::v + i, state_->v[i], slice_v(stack, i));
  fill(var::s, state_->s, slice_s(stack));
  for (int i = 0; i < 3; ++i) {
    fill(var::omega + i, dm.omega[i], component_slices(derived_, true, i));
    fill(var::S + i, dm.grad_ent[i], component_slices(derived_, false, i));
  }
}

CellJet StackJets::at(std::size_t q) const {
  CellJet j;
  for (int t = 0; t < kUnknowns; ++t) {
    j.V[t] = value_[t][q];
    j.BV[t] = material_[t][q];
    for (int a = 0; a < 3; ++a) j.dV[t][a] = grad_[t][a][q];
  }
  j.eos = state_->eos.evaluate(j.V[var::rho], j.V[var::s]);
  j.rho_bar = state_->eos.background_density();
  return j;
}

SliceJets::SliceJets(const FluidState& state, const DerivedState& derived) : state_(&state) {
  auto fill = [&](int theta, const ScalarField& value) {
    value_[theta] = value;
    grad_[theta] = gradient(value);
  };
  fill(var::rho, state.rho_log);
  for (int i = 0; i < 3; ++i) fill(var::v + i, state.v[i]);
  fill(var::s, state.s);
  for (int i = 0; i < 3; ++i) {
    fill(var::omega + i, derived.omega[i]);
    fill(var::S + i, derived.grad_ent[i]);
  }
}

CellJet SliceJets::at(std::size_t q) const {
  CellJet j;
  for (int t = 0; t < kUnknowns; ++t) {
    j.V[t] = value_[t][q];
    for (int a = 0; a < 3; ++a) j.dV[t][a] = grad_[t][a][q];
  }
  j.eos = state_->eos.evaluate(j.V[var::rho], j.V[var::s]);
  j.rho_bar = state_->eos.background_density();

  const double c2 = j.c() * j.c();
  const double ent_force = std::exp(-j.rho()) * j.ps();
  j.BV[var::rho] = -j.div_v();
  for (int i = 0; i < 3; ++i) j.BV[var::v + i] = -c2 * j.drho(i) - ent_force * j.dV[var::s][i];
  j.BV[var::s] = 0.0;
  const Vec3 l_omega = terms::transport_omega_rhs(j);
  const Vec3 l_S = terms::transport_S_rhs(j);
  for (int i = 0; i < 3; ++i) {
    j.BV[var::omega + i] = l_omega[i];
    j.BV[var::S + i] = l_S[i];
  }
  return j;
}

CellJet jet_from_gradient(const StateArray& V, const StateGradient& dV, const EosModel& eos) {
  CellJet j;
  j.V = V;
  for (int t = 0; t < kUnknowns; ++t) {
    j.BV[t] = dV(0, t);
    for (int a = 0; a < 3; ++a) {
      j.dV[t][a] = dV(a + 1, t);
      j.BV[t] += V[var::v + a] * dV(a + 1, t);
    }
  }
  j.eos = eos.evaluate(V[var::rho], V[var::s]);
  j.rho_bar = eos.background_density();
  return j;
}

}  // namespace eulerform
