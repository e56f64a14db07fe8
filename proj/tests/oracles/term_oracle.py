#!/usr/bin/env python3
"""Freezes reference values of every source term at one random cell.

Written from the term formulas with numpy contractions and a sympy
EOS, sharing no code with the C++ terms. Regenerate with

    python3 tests/oracles/term_oracle.py > tests/unit/term_oracle_values.inc
"""
import numpy as np
import sympy as sp

GAMMA, RHO_BAR, SIGMA = 1.4, 1.3, 0.7
rng = np.random.default_rng(20240611)

V = rng.uniform(-0.5, 0.5, 11)
BV = rng.uniform(-0.5, 0.5, 11)
dV = rng.uniform(-0.5, 0.5, (11, 3))  # dV[Theta, a] = d_a V^Theta

# EOS point from the pressure law, differentiated symbolically.
r_, s_ = sp.symbols("r s")
p = RHO_BAR * sp.exp(GAMMA * r_ + SIGMA * s_) / GAMMA
c_expr = sp.sqrt(sp.exp(-r_) * sp.diff(p, r_) / RHO_BAR)
at = {r_: V[0], s_: V[4]}
ev = lambda e: float(e.subs(at).evalf(30))
ps = ev(sp.diff(p, s_)) / RHO_BAR
psr = ev(sp.diff(p, s_, r_)) / RHO_BAR
pss = ev(sp.diff(p, s_, 2)) / RHO_BAR
c = ev(c_expr)
c_r = ev(sp.diff(c_expr, r_))
c_s = ev(sp.diff(c_expr, s_))

rho = V[0]
v, Om, S = V[1:4], V[5:8], V[8:11]
Brho, Bv, BS = BV[0], BV[1:4], BV[8:11]
drho, Dv, DOm, DS = dV[0], dV[1:4], dV[5:8], dV[8:11]  # D[i, a] = d_a X^i

eps = np.zeros((3, 3, 3))
for i, j, k in [(0, 1, 2), (1, 2, 0), (2, 0, 1)]:
    eps[i, j, k], eps[i, k, j] = 1.0, -1.0

# Inverse metric as an explicit 4x4 matrix; d_t X = B X - v.grad X.
ginv = np.zeros((4, 4))
ginv[0, 0] = -1.0
ginv[0, 1:] = ginv[1:, 0] = -v
ginv[1:, 1:] = c * c * np.eye(3) - np.outer(v, v)


def spacetime(theta):
    g = dV[theta]
    return np.concatenate([[BV[theta] - v @ g], g])


def Qg(a, b):
    return spacetime(a) @ ginv @ spacetime(b)


curlOm = np.einsum("iab,ba->i", eps, DOm)
divv, divS = np.trace(Dv), np.trace(DS)
S_dv = Dv @ S          # S^a d_a v^i
S_drho = S @ drho
K = np.exp(-3 * rho) / c**2 * ps
Kc = np.exp(-3 * rho) / c**3 * c_r * ps
Kr = np.exp(-3 * rho) / c**2 * psr
swap = np.einsum("ab,ba->", Dv, Dv)

C = np.exp(-rho) * curlOm + K * S_dv - K * divv * S
D = np.exp(-2 * rho) * divS - np.exp(-2 * rho) * S_drho

br1 = S_drho * Bv - Brho * S_dv
br2 = divv * Brho - Bv @ drho

terms = {
    "wave_v.curl_mod": -c**2 * np.exp(2 * rho) * C,
    "wave_v.q_v": -(1 + c_r / c) * np.array([Qg(0, 1 + i) for i in range(3)]),
    "wave_v.l_vorticity": 2 * np.exp(rho) * np.einsum("iab,a,b->i", eps, Bv, Om),
    "wave_v.l_omega_S": -ps * np.einsum("iab,a,b->i", eps, Om, S),
    "wave_v.l_S_grad_v_psr": -0.5 * np.exp(-rho) * psr * S_dv,
    "wave_v.l_Brho_S": -2 * np.exp(-rho) * c_r / c * ps * Brho * S,
    "wave_v.l_Brho_S_psr": np.exp(-rho) * psr * Brho * S,
    "wave_rho.div_mod": -np.exp(rho) * ps * D,
    "wave_rho.q_metric": -3 * c_r / c * Qg(0, 0),
    "wave_rho.q_div": divv * divv - swap,
    # rederived coefficient -5/2
    "wave_rho.l_S_grad_rho": -2.5 * np.exp(-rho) * psr * S_drho,
    "wave_rho.l_S_squared": -np.exp(-rho) * pss * (S @ S),
    "transport_omega.l_stretch": Dv @ Om,
    "transport_omega.l_baroclinic": -np.exp(-2 * rho) / c**2 * ps
    * np.einsum("iab,a,b->i", eps, Bv, S),
    "transport_S.l_grad_v": -S_dv,
    "transport_S.l_omega": np.exp(rho) * np.einsum("iab,a,b->i", eps, Om, S),
    "div_omega.l_divomega": -(Om @ drho),
    "transport_C.vorticity_1": -2 * np.exp(-rho) * np.einsum("iab,ka,kb->i", eps, Dv, DOm),
    "transport_C.vorticity_2": np.exp(-rho) * np.einsum("ajk,ia,kj->i", eps, Dv, DOm),
    "transport_C.entropy_1": K * (Dv @ BS - Bv * divS),
    "transport_C.entropy_2": K * (DS @ Bv - divv * BS),
    "transport_C.q_C_1": K * S * (swap - divv * divv),
    "transport_C.q_C_2": K * (divv * S_dv - Dv @ S_dv),
    "transport_C.q_C_3": 2 * K * br1,
    "transport_C.q_C_4": 2 * Kc * br1,
    "transport_C.q_C_5": -Kr * br1,
    "transport_C.q_C_6": -Kr * S * br2,
    "transport_C.q_C_7": 2 * K * S * br2,
    "transport_C.q_C_8": 2 * Kc * S * br2,
    "transport_C.l_C_1": 2 * np.exp(-3 * rho) / c**3 * c_s * ps * Bv * (S @ S),
    "transport_C.l_C_2": -2 * np.exp(-3 * rho) / c**3 * c_s * ps * (S @ Bv) * S,
    # p_s_s pair: -K_ss (Bv |S|^2 - (S.Bv) S)
    "transport_C.l_C_3": -np.exp(-3 * rho) / c**2 * pss * Bv * (S @ S),
    "transport_C.l_C_4": np.exp(-3 * rho) / c**2 * pss * (Bv @ S) * S,
    "transport_D.null": 2 * np.exp(-2 * rho) * (divv * divS - np.einsum("ba,ab->", Dv, DS)),
    "transport_D.curl_omega": np.exp(-rho) * (curlOm @ S),
    "transport_D.q_D": 2 * np.exp(-2 * rho) * ((S_dv @ drho) - divv * S_drho),
}


def arr(x):
    return ", ".join(f"{float(y):.17g}" for y in np.atleast_1d(x))


print("// Generated by tests/oracles/term_oracle.py; do not edit.")
print(f"constexpr double kOracleGamma = {GAMMA};")
print(f"constexpr double kOracleRhoBar = {RHO_BAR};")
print(f"constexpr double kOracleSigma = {SIGMA};")
print(f"constexpr double kOracleV[11] = {{{arr(V)}}};")
print(f"constexpr double kOracleBV[11] = {{{arr(BV)}}};")
print(f"constexpr double kOracleDV[11][3] = {{{', '.join('{' + arr(r) + '}' for r in dV)}}};")
print(f"constexpr double kOracleCurlMod[3] = {{{arr(C)}}};")
print(f"constexpr double kOracleDivMod = {float(D):.17g};")
print("struct OracleTerm {\n  const char* id;\n  int components;\n  double value[3];\n};")
print("constexpr OracleTerm kOracleTerms[] = {")
for name, val in terms.items():
    a = np.atleast_1d(val)
    print(f'    {{"{name}", {a.size}, {{{arr(a)}}}}},')
print("};")
