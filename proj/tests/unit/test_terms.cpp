#include <doctest.h>

#include <cmath>
#include <set>
#include <string>

#include "eulerform/cell_jet.hpp"
#include "eulerform/term_catalog.hpp"

using namespace eulerform;

namespace {

#include "term_oracle_values.inc"

CellJet oracle_jet() {
  CellJet j;
  for (int q = 0; q < kUnknowns; ++q) {
    j.V[q] = kOracleV[q];
    j.BV[q] = kOracleBV[q];
    for (int a = 0; a < 3; ++a) j.dV[q][a] = kOracleDV[q][a];
  }
  j.eos = EosModel::polytropic(kOracleGamma, kOracleRhoBar, kOracleSigma).evaluate(j.rho(), j.V[var::s]);
  j.rho_bar = kOracleRhoBar;
  return j;
}

const TermEntry* find_term(const std::string& id) {
  for (const auto& t : term_catalog())
    if (t.id == id) return &t;
  return nullptr;
}

}  // namespace

TEST_CASE("every catalog term matches the independent evaluation at one cell") {
  const CellJet j = oracle_jet();
  for (const auto& ref : kOracleTerms) {
    CAPTURE(ref.id);
    const TermEntry* t = find_term(ref.id);
    REQUIRE(t != nullptr);
    REQUIRE(equation_components(t->equation) == ref.components);
    const Vec3 got = t->eval(j);
    for (int i = 0; i < ref.components; ++i) {
      CAPTURE(i);
      CHECK(got[i] == doctest::Approx(ref.value[i]).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("the oracle covers the catalog exactly once") {
  std::set<std::string> oracle;
  for (const auto& ref : kOracleTerms) CHECK(oracle.insert(ref.id).second);
  std::set<std::string> catalog;
  for (const auto& t : term_catalog()) CHECK(catalog.insert(t.id).second);
  CHECK(oracle == catalog);
}

TEST_CASE("modified variables from the jet") {
  const CellJet j = oracle_jet();
  const Vec3 C = j.curl_mod();
  for (int i = 0; i < 3; ++i) CHECK(C[i] == doctest::Approx(kOracleCurlMod[i]).epsilon(1e-13));
  CHECK(j.div_mod() == doctest::Approx(kOracleDivMod).epsilon(1e-13));
}

TEST_CASE("velocity null form is Q^g(d rho, d v) with its coefficient") {
  const CellJet j = oracle_jet();
  const Vec3 q = terms::q_v(j);
  for (int i = 0; i < 3; ++i) {
    const double expected = -(1.0 + j.eos.c_rho / j.c()) * j.ginv(var::rho, var::v + i);
    CHECK(q[i] == expected);
  }
}

TEST_CASE("catalog classes and bookkeeping") {
  int counts[3] = {};
  for (const auto& t : term_catalog()) {
    ++counts[static_cast<int>(t.cls)];
    CHECK(t.expected_exponent == (t.cls == TermClass::i ? 0.0 : 1.0));
    if (t.cls == TermClass::i) CHECK(t.differentiates.empty());
    else CHECK_FALSE(t.differentiates.empty());
  }
  CHECK(counts[0] == 3);
  CHECK(counts[0] + counts[1] + counts[2] == static_cast<int>(term_catalog().size()));
  CHECK(term_catalog().size() == 36);
  CHECK(std::string(find_term("transport_C.q_C_8")->id) == "transport_C.q_C_8");
}

TEST_CASE("class (i) terms vanish with Omega = S = 0") {
  CellJet j = oracle_jet();
  for (int a = 0; a < 3; ++a) j.V[var::omega + a] = j.V[var::S + a] = 0.0;
  for (const auto& t : term_catalog()) {
    if (t.cls != TermClass::i) continue;
    const Vec3 x = t.eval(j);
    CHECK(x[0] == 0.0);
    CHECK(x[1] == 0.0);
    CHECK(x[2] == 0.0);
  }
}

TEST_CASE("entropy-coupled terms are exactly zero for a barotropic law") {
  CellJet j = oracle_jet();
  j.eos = EosModel::chaplygin(0.2, 1.5).evaluate(j.rho(), j.V[var::s]);
  for (const auto& t : term_catalog()) {
    CAPTURE(t.id);
    const Vec3 x = t.eval(j);
    if (t.entropy_coupled) {
      CHECK(x[0] == 0.0);
      CHECK(x[1] == 0.0);
      CHECK(x[2] == 0.0);
    }
  }
}

TEST_CASE("equation and group sums add their terms") {
  const CellJet j = oracle_jet();
  Vec3 sum{};
  for (const auto& ref : kOracleTerms)
    if (std::string(ref.id).starts_with("transport_C."))
      for (int i = 0; i < 3; ++i) sum[i] += ref.value[i];
  const Vec3 got = equation_rhs(Equation::transport_C, j);
  for (int i = 0; i < 3; ++i) CHECK(got[i] == doctest::Approx(sum[i]).epsilon(1e-12));

  Vec3 qc{};
  for (int line = 1; line <= 8; ++line) {
    const Vec3 x = terms::q_C_line(line, j);
    for (int i = 0; i < 3; ++i) qc[i] += x[i];
  }
  const Vec3 g = group_sum(SourceGroup::q_C, j);
  for (int i = 0; i < 3; ++i) CHECK(g[i] == doctest::Approx(qc[i]).epsilon(1e-14));
  CHECK_THROWS(terms::q_C_line(9, j));
}

TEST_CASE("transport and curl sources vanish with Omega = S = 0") {
  CellJet j = oracle_jet();
  for (int a = 0; a < 3; ++a) j.V[var::omega + a] = j.V[var::S + a] = 0.0;
  for (SourceGroup g : {SourceGroup::l_omega, SourceGroup::l_S, SourceGroup::l_divomega, SourceGroup::l_C,
                        SourceGroup::q_C, SourceGroup::q_D}) {
    const Vec3 x = group_sum(g, j);
    CHECK(x[0] == 0.0);
    CHECK(x[1] == 0.0);
    CHECK(x[2] == 0.0);
  }
}

TEST_CASE("q_D survives a barotropic law when S is nonzero") {
  // Its coefficient is 2 exp(-2 rho), with no entropy derivative of p.
  CellJet j = oracle_jet();
  j.eos = EosModel::chaplygin(0.0, 1.0).evaluate(j.rho(), 0.0);
  CHECK(terms::q_D(j) == doctest::Approx(find_term("transport_D.q_D")->eval(oracle_jet())[0]).epsilon(1e-14));
  CHECK(terms::q_D(j) != 0.0);
}
