#include "eulerform/reformulation.hpp"

#include "eulerform/acoustic_geometry.hpp"
#include "eulerform/errors.hpp"
#include "eulerform/parallel.hpp"

namespace eulerform {

SourceTerms source_terms(const FluidState& state, const DerivedState& derived,
                         const SliceStack& stack) {
  stack.validate();
  const FluidState& mid = stack.middle();
  if (!(state.grid() == mid.grid()) || state.time != mid.time) {
    throw UsageError("source_terms: state is not the stack's middle slice");
  }
  (void)derived;  // the stack's own derived fields are used so B-factors match
  const StackJets jets(stack);
  const Grid& g = state.grid();
  SourceTerms s{VectorField(g), ScalarField(g), VectorField(g), ScalarField(g), VectorField(g),
                ScalarField(g), VectorField(g), VectorField(g), ScalarField(g), VectorField(g)};

  const std::size_t m = jets.size();
  parallel_for(m, [&](std::size_t q) {
    const CellJet j = jets.at(q);
    const auto put3 = [&](VectorField& f, SourceGroup grp) {
      const Vec3 x = group_sum(grp, j);
      for (int i = 0; i < 3; ++i) f[i][q] = x[i];
    };
    put3(s.q_v, SourceGroup::q_v);
    put3(s.q_C, SourceGroup::q_C);
    put3(s.l_v, SourceGroup::l_v);
    put3(s.l_omega, SourceGroup::l_omega);
    put3(s.l_S, SourceGroup::l_S);
    put3(s.l_C, SourceGroup::l_C);
    s.q_rho[q] = group_sum(SourceGroup::q_rho, j)[0];
    s.q_D[q] = group_sum(SourceGroup::q_D, j)[0];
    s.l_rho[q] = group_sum(SourceGroup::l_rho, j)[0];
    s.l_divomega[q] = group_sum(SourceGroup::l_divomega, j)[0];
  });
  return s;
}

std::vector<const ScalarField*> SystemResiduals::components(Equation eq) const {
  auto vec = [](const VectorField& v) {
    return std::vector<const ScalarField*>{&v[0], &v[1], &v[2]};
  };
  switch (eq) {
    case Equation::wave_v: return vec(wave.res_v);
    case Equation::wave_rho: return {&wave.res_rho};
    case Equation::transport_omega: return vec(transport.res_omega);
    case Equation::transport_s: return {&transport.res_s};
    case Equation::transport_S: return vec(transport.res_S);
    case Equation::div_omega: return {&divcurl.res_divomega};
    case Equation::transport_C: return vec(divcurl.res_C);
    case Equation::transport_D: return {&divcurl.res_D};
    case Equation::curl_S: return vec(divcurl.res_curlS);
  }
  return {};
}

SystemResiduals system_residuals(const SliceStack& stack) {
  const StackJets jets(stack);
  const FluidState& mid = stack.middle();
  const Grid& g = mid.grid();
  const std::size_t m = g.size();

  // Left-hand sides that are not read off the jets.
  std::array<ScalarField, 3> box_v;
  for (int i = 0; i < 3; ++i) box_v[i] = box_g(stack, slice_v(stack, i));
  const ScalarField box_rho = box_g(stack, slice_rho(stack));

  const auto& derived = jets.derived_slices();
  std::array<ScalarField, 3> BC;
  for (int i = 0; i < 3; ++i) {
    std::vector<ScalarField> C;
    for (const auto& d : derived) C.push_back(d.curl_mod[i]);
    BC[i] = material_derivative(stack, C);
  }
  std::vector<ScalarField> D;
  for (const auto& d : derived) D.push_back(d.div_mod);
  const ScalarField BD = material_derivative(stack, D);
  const DerivedState& dm = jets.derived_middle();
  const ScalarField div_omega = flat_div(dm.omega);

  SystemResiduals r;
  r.wave = {VectorField(g), ScalarField(g)};
  r.transport = {VectorField(g), ScalarField(g), VectorField(g)};
  r.divcurl = {ScalarField(g), VectorField(g), ScalarField(g), flat_curl(dm.grad_ent)};

  parallel_for(m, [&](std::size_t q) {
    const CellJet j = jets.at(q);
    const Vec3 wv = equation_rhs(Equation::wave_v, j);
    const Vec3 to = equation_rhs(Equation::transport_omega, j);
    const Vec3 tS = equation_rhs(Equation::transport_S, j);
    const Vec3 tC = equation_rhs(Equation::transport_C, j);
    for (int i = 0; i < 3; ++i) {
      r.wave.res_v[i][q] = box_v[i][q] - wv[i];
      r.transport.res_omega[i][q] = j.BV[var::omega + i] - to[i];
      r.transport.res_S[i][q] = j.BV[var::S + i] - tS[i];
      r.divcurl.res_C[i][q] = BC[i][q] - tC[i];
    }
    r.wave.res_rho[q] = box_rho[q] - equation_rhs(Equation::wave_rho, j)[0];
    r.transport.res_s[q] = j.BV[var::s];
    r.divcurl.res_divomega[q] = div_omega[q] - equation_rhs(Equation::div_omega, j)[0];
    r.divcurl.res_D[q] = BD[q] - equation_rhs(Equation::transport_D, j)[0];
  });
  return r;
}

WaveResiduals wave_residuals(const SliceStack& stack) { return system_residuals(stack).wave; }

TransportResiduals transport_residuals(const SliceStack& stack) {
  return system_residuals(stack).transport;
}

DivCurlResiduals divcurl_residuals(const SliceStack& stack) {
  return system_residuals(stack).divcurl;
}

}  // namespace eulerform
