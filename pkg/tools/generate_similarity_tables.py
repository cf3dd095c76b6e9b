#!/usr/bin/env python3
"""Compute and freeze the self-similar solution tables used by the
reference oracles: the zero-toughness radial regime (width/pressure
profiles and the radius prefactor) and the height-contained similarity
profile. Writes src/planarfrac/reference/_tables.py.

The radial solve iterates between the axisymmetric crack elasticity
operator (Sneddon double integral) and the integrated self-similar
lubrication balance; the height-contained profile is shot from the tip
expansion of its similarity ODE. Both are gated by their defining
conservation identities, printed at the end.
"""

import pathlib
import sys

import numpy as np
from scipy.integrate import solve_ivp

ROOT = pathlib.Path(__file__).resolve().parents[1]

BETA_M = 2.0 ** (1.0 / 3.0) * 3.0 ** (5.0 / 6.0)


# ----------------------------------------------------------------------
# radial, viscosity-dominated similarity solution
#
# Unknowns: width profile W(rho), net pressure profile P(rho) on [0, 1]
# and the radius prefactor gamma, satisfying
#   W(rho)   = (8 gamma / pi) * Int_rho^1 tau/sqrt(tau^2-rho^2) g(tau) dtau
#   g(tau)   = Int_0^{pi/2} sin(t) P(tau sin t) dt          (elasticity)
#   g(1)     = 0                                            (zero toughness)
#   rho W^3 P' = -gamma^2 (I(rho) + (4/9) rho^2 W)          (lubrication)
#   2 pi gamma^2 Int_0^1 rho W drho = 1                     (volume)
# with I(rho) = Int_rho^1 xi W dxi.
# ----------------------------------------------------------------------

RHO_MAX = 1.0 - 1e-4   # numeric grid cap; the tip tail is handled analytically


def radial_grid(n):
    """Nodes clustered at both ends: sine clustering toward the tip plus a
    cubic boost so the (1-rho)^(2/3) width behavior is well resolved."""
    u = np.linspace(0.0, 1.0, n)
    base = np.sin(0.5 * np.pi * u) ** 1.5
    return 1e-6 + (RHO_MAX - 1e-6) * base


def cumulative_from_tip(rho, f):
    """I(rho) = Int_rho^1 f dxi by trapezoid, assuming f(1) ~ finite/zero."""
    seg = 0.5 * (f[1:] + f[:-1]) * np.diff(rho)
    out = np.zeros_like(rho)
    out[:-1] = seg[::-1].cumsum()[::-1]
    return out


def integrate_pressure(rho, dp, k_log, anchor=None):
    """P from its derivative with endpoint-adapted segment rules.

    dp ~ k_log/rho near the origin and ~ c (1-rho)^(-4/3) near the tip;
    each segment is integrated in the variable that renders its local
    model exact (log near 0, v = (1-rho)^(-1/3) near 1, plain otherwise).
    """
    n = len(rho)
    seg = np.zeros(n - 1)
    for i in range(n - 1):
        a, b = rho[i], rho[i + 1]
        mid = 0.5 * (a + b)
        if mid < 0.2:
            # trapz in ln(rho) of rho*dp
            seg[i] = 0.5 * (a * dp[i] + b * dp[i + 1]) * np.log(b / a)
        elif mid > 0.7:
            # trapz in v = (1-rho)^(-1/3) of 3 * (1-rho)^(4/3) * dp
            va, vb = (1 - a) ** (-1. / 3.), (1 - b) ** (-1. / 3.)
            qa = dp[i] * (1 - a) ** (4. / 3.)
            qb = dp[i + 1] * (1 - b) ** (4. / 3.)
            seg[i] = 3.0 * 0.5 * (qa + qb) * (vb - va)
        else:
            seg[i] = 0.5 * (dp[i] + dp[i + 1]) * (b - a)
    p = np.concatenate([[0.0], np.cumsum(seg)])
    return p


def pressure_interpolator(rho, p, k_log, B):
    """Callable P(x) with log tail below rho[0] and the analytic
    B (1-x)^(-1/3) + D tail above rho[-1] (D anchored by continuity)."""
    D = p[-1] - B * (1 - rho[-1]) ** (-1. / 3.)

    def interp(x):
        x = np.asarray(x, dtype=float)
        out = np.interp(x, rho, p)
        low = x < rho[0]
        if np.any(low):
            out = np.where(low, p[0] + k_log * np.log(np.maximum(x, 1e-300) / rho[0]), out)
        high = x > rho[-1]
        if np.any(high):
            out = np.where(high, B * (1 - np.minimum(x, 1 - 1e-12)) ** (-1. / 3.) + D, out)
        return out

    return interp, D


def solve_radial_m(n=1001, max_iter=600, relax=0.35, tol=1e-12, verbose=True):
    rho = radial_grid(n)
    delta = 1.0 - RHO_MAX
    theta_nodes, theta_weights = np.polynomial.legendre.leggauss(96)
    th = 0.25 * np.pi * (theta_nodes + 1.0)
    th_w = 0.25 * np.pi * theta_weights
    sin_th = np.sin(th)
    u_nodes, u_weights = np.polynomial.legendre.leggauss(96)
    uu = 0.5 * (u_nodes + 1.0)
    uw = 0.5 * u_weights

    # Int_{rho_max}^1 xi (1-xi)^(2/3) dxi for the analytic tip tail
    tail_moment = 0.6 * delta ** (5.0 / 3.0) - 0.375 * delta ** (8.0 / 3.0)
    # the viscous tip pair is W ~ A s^(2/3), P ~ B s^(-1/3) + D with
    # A = BETA_M (4 gamma / 9)^(1/3) gamma^(2/3); eliminating A gives the
    # universal pressure coefficient B = -3^(-4/3)
    B_TIP = -(3.0 ** (-4.0 / 3.0))

    def tip_coeff_of_gamma(gamma):
        return BETA_M * (4.0 / 9.0 * gamma) ** (1.0 / 3.0) * gamma ** (2.0 / 3.0)

    def amplitude(W):
        a_grid = np.trapezoid(rho * W, rho)
        gamma0 = 1.0 / np.sqrt(2.0 * np.pi * a_grid)
        return a_grid + tip_coeff_of_gamma(gamma0) * tail_moment

    def forward_map(W):
        """One elasticity<-lubrication pass at the input's own amplitude.

        The region (RHO_MAX, 1] is closed with the analytic viscous tip
        pair; its coefficients follow from gamma alone, so no fragile tip
        fit enters the closure.
        """
        vol = amplitude(W)
        gamma = 1.0 / np.sqrt(2.0 * np.pi * vol)
        A = tip_coeff_of_gamma(gamma)

        I = cumulative_from_tip(rho, rho * W) + A * tail_moment
        flux = -(gamma ** 2) * (I + (4.0 / 9.0) * rho ** 2 * W)
        dP = flux / (rho * W ** 3)
        k_log = rho[0] * dP[0]
        B = B_TIP

        P = integrate_pressure(rho, dP, k_log)
        interp0, _ = pressure_interpolator(rho, P, k_log, B)
        # zero stress intensity: weighted tip integral of P must vanish;
        # Int_0^{pi/2} sin(t) dt = 1 so the shift equals the integral itself
        J = float(th_w @ (sin_th * interp0(sin_th)))
        P = P - J
        interp, _ = pressure_interpolator(rho, P, k_log, B)

        g = np.array([float(th_w @ (sin_th * interp(tau * sin_th))) for tau in rho])
        # K_I = 0 makes g vanish exactly at the front
        g_tau = np.concatenate([rho, [1.0]])
        g_val = np.concatenate([g, [0.0]])

        W_new = np.empty_like(W)
        for idx, r in enumerate(rho):
            tau_u = np.sqrt(r * r + (1.0 - r * r) * uu ** 2)
            g_u = np.interp(tau_u, g_tau, g_val)
            W_new[idx] = (8.0 * gamma / np.pi) * np.sqrt(1.0 - r * r) * float(uw @ g_u)
        return W_new, gamma, P, k_log, B, flux

    # The grid part of the map is exactly homogeneous, F(cW) = c^(-7/2) F(W),
    # so the amplitude mode is wildly unstable under direct iteration. Each
    # pass therefore solves the amplitude analytically (c below makes input
    # and output amplitudes agree under that scaling) and relaxes only the
    # remaining shape discrepancy; at the fixed point c = 1 and W = F(W).
    W = (1.0 - rho ** 2) ** (2.0 / 3.0)
    for it in range(max_iter):
        W_new = forward_map(W)[0]
        if W_new.min() <= 0.0:
            raise RuntimeError("radial solve produced a non-positive width iterate")
        c = (amplitude(W_new) / amplitude(W)) ** (2.0 / 9.0)
        W_scaled = c * W
        W_new_scaled = c ** (-3.5) * W_new
        change = np.max(np.abs(W_new_scaled - W_scaled)) / np.max(W_scaled)
        W = (1.0 - relax) * W_scaled + relax * W_new_scaled
        if verbose and (it % 50 == 0 or change < tol):
            print(f"  radial iter {it:4d}: c={c:.10f} change={change:.3e}")
        if change < tol:
            break

    W_check, gamma, P, k_log, B_tip, flux = forward_map(W)
    fp_residual = np.max(np.abs(W_check - W)) / np.max(W)
    A_tip = tip_coeff_of_gamma(gamma)

    # diagnostic: two-term fit of the near-tip region against the asymptote
    sel = ((1.0 - rho) > 2e-4) & ((1.0 - rho) < 3e-2)
    s = 1.0 - rho[sel]
    fit = np.polyfit(s ** (1.0 / 3.0), W[sel] / s ** (2.0 / 3.0), 1)
    A_fit = float(fit[-1])

    checks = {
        "fixed_point_residual": fp_residual,
        "volume_residual": abs(2.0 * np.pi * gamma ** 2 * amplitude(W) - 1.0),
        "source_flux_residual": abs(-flux[0] * 2.0 * np.pi - 1.0),
        "tip_width_vs_asymptote": abs(A_fit / A_tip - 1.0),
    }
    return {"rho": rho, "W": W, "P": P, "gamma": gamma, "k_log": k_log,
            "A_tip": A_tip, "B_tip": B_tip, "checks": checks}


# ----------------------------------------------------------------------
# height-contained similarity profile
#
# (1/5) V - (4/5) eta V' = (V^4)'' on (0, 1) after normalizing the ODE
# constant to 1; tip expansion V = A shat^(1/3) (1 - shat/96 + ...) with
# A = (3/5)^(1/3). The physical constants follow from rescaling to
# V(0) = 1 plus the volume and inlet-flux identities.
# ----------------------------------------------------------------------

def solve_pkn(n_out=401):
    A = (3.0 / 5.0) ** (1.0 / 3.0)
    s0 = 1e-10

    def rhs(s, y):
        w, f = y            # f = (w^4)'
        dw = f / (4.0 * w ** 3)
        df = (0.2 * w + 0.8 * (1.0 - s) * dw)
        return [dw, df]

    w0 = A * s0 ** (1.0 / 3.0) * (1.0 - s0 / 96.0)
    f0 = (4.0 / 3.0) * A ** 4 * s0 ** (1.0 / 3.0) * (1.0 - 4.0 * s0 / 96.0 * 7.0 / 4.0)
    sol = solve_ivp(rhs, [s0, 1.0], [w0, f0], rtol=1e-12, atol=1e-14,
                    dense_output=True, method="RK45")
    if not sol.success:
        raise RuntimeError(f"height-contained tip shooting failed: {sol.message}")

    s_hat = np.linspace(s0, 1.0, n_out)
    w_hat = sol.sol(s_hat)[0]
    m = w_hat[-1]                       # un-normalized inlet value
    eta = 1.0 - s_hat[::-1]             # eta grid, 0 .. 1
    V = (w_hat[::-1] / m)               # normalized profile, V(0) = 1
    d_const = m ** 3                    # ODE constant after rescaling
    J = np.trapezoid(V, eta)                # Int_0^1 V deta
    flux0 = -sol.sol(1.0)[1] / m ** 4   # (V^4)'(eta=0)

    checks = {
        "inlet_flux_identity": abs(J + d_const * flux0) / J,
        "tip_value": abs(V[-1]),
    }
    return {"eta": eta, "V": V, "d_const": d_const, "J": J, "checks": checks}


def fmt_array(name, arr, per_line=5):
    rows = []
    vals = [f"{v!r}" for v in arr.tolist()]
    for i in range(0, len(vals), per_line):
        rows.append("    " + ", ".join(vals[i:i + per_line]) + ",")
    body = "\n".join(rows)
    return f"{name} = np.array([\n{body}\n])\n"


def main():
    print("solving radial similarity problem ...")
    rad = solve_radial_m()
    print("radial checks:", rad["checks"])
    print("solving height-contained similarity profile ...")
    pkn = solve_pkn()
    print("height-contained checks:", pkn["checks"])

    out = ROOT / "src" / "planarfrac" / "reference" / "_tables.py"
    with open(out, "w") as fh:
        fh.write('"""Frozen self-similar solution tables.\n\n'
                 "Generated by tools/generate_similarity_tables.py; the defining\n"
                 "conservation identities of these tables are re-checked in the\n"
                 "test suite. Do not edit by hand.\n"
                 '"""\n\nimport numpy as np\n\n')
        fh.write(f"RADIAL_M_GAMMA = {rad['gamma']!r}\n")
        fh.write(f"RADIAL_M_KLOG = {rad['k_log']!r}\n")
        fh.write(f"RADIAL_M_A_TIP = {rad['A_tip']!r}\n")
        fh.write(f"RADIAL_M_B_TIP = {rad['B_tip']!r}\n\n")
        fh.write(fmt_array("RADIAL_M_RHO", rad["rho"]))
        fh.write(fmt_array("RADIAL_M_W", rad["W"]))
        fh.write(fmt_array("RADIAL_M_P", rad["P"]))
        fh.write(f"\nPKN_D = {pkn['d_const']!r}\n")
        fh.write(f"PKN_J = {pkn['J']!r}\n\n")
        fh.write(fmt_array("PKN_ETA", pkn["eta"]))
        fh.write(fmt_array("PKN_V", pkn["V"]))
    print(f"wrote {out}")
    gating = {k: v for k, v in {**rad["checks"], **pkn["checks"]}.items()
              if k != "tip_width_vs_asymptote"}  # fit-window diagnostic only
    bad = {k: v for k, v in gating.items() if v > 5e-3}
    if bad:
        print("WARNING: weak consistency:", bad)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
