"""Near-front asymptotic model for a steadily moving fluid-driven crack tip.

The default model blends the toughness and viscosity limiting solutions
through a cubic interpolation,

    w(s)^3 = (K'/E')^3 s^(3/2) + BETA_M^3 (mu' V / E') s^2,

with s the distance behind the front and V the local front velocity. It is
exact in both limits and monotone in s and V. The model is deliberately a
small, replaceable surface: richer tip solutions (e.g. with leak-off) can be
swapped in behind the same three entry points (width, inversion, volume).
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import SolverError

# viscosity-asymptote prefactor 2^(1/3) * 3^(5/6)
BETA_M = 2.0 ** (1.0 / 3.0) * 3.0 ** (5.0 / 6.0)

_SQRT_32_PI = math.sqrt(32.0 / math.pi)


def kprime_from_kic(k_ic):
    """Tip-scaling toughness K' = sqrt(32/pi) * K_Ic."""
    return _SQRT_32_PI * k_ic


@dataclass(frozen=True)
class TipParams:
    """Material/fluid inputs of the tip model (all SI)."""

    e_prime: float          # plane-strain modulus [Pa]
    k_prime: float = 0.0    # sqrt(32/pi) K_Ic [Pa sqrt(m)]
    mu_prime: float = 0.0   # 12 mu [Pa s]
    c_prime: float = 0.0    # 2 C_L [m/sqrt(s)]; unused by the default model

    def __post_init__(self):
        if self.e_prime <= 0:
            raise ValueError("e_prime must be positive")
        if min(self.k_prime, self.mu_prime, self.c_prime) < 0:
            raise ValueError("tip parameters must be non-negative")


def tip_width(s, params, velocity):
    """Fracture width at distance s behind a front moving at the given velocity."""
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0):
        raise ValueError("tip distance s must be positive")
    if velocity < 0:
        raise ValueError("front velocity must be non-negative")
    wk3 = (params.k_prime / params.e_prime) ** 3 * s ** 1.5
    wm3 = BETA_M ** 3 * (params.mu_prime * velocity / params.e_prime) * s ** 2
    return np.cbrt(wk3 + wm3)


def invert_tip_asymptote(w, s_prev, dt, params, s_max=None):
    """Distance s behind the new front such that tip_width(s, V) = w with the
    velocity V = (s - s_prev)/dt embedded (implicit front advance).

    s_prev may be negative when the front passed this survey cell during the
    current step (its center lay ahead of the old front); the embedded
    velocity then counts the full level-set displacement. Returns NaN when
    the front is locally stagnant, i.e. when w does not exceed the
    zero-velocity (toughness) width at s_prev, so no admissible root with
    s > s_prev exists.
    """
    if w <= 0 or dt <= 0:
        raise ValueError("invert_tip_asymptote needs w > 0 and dt > 0")
    kp, mp, ep = params.k_prime, params.mu_prime, params.e_prime

    # The residual s -> tip_width(s, max(0, (s - s_prev)/dt))^3 - w^3 is
    # strictly increasing, so a root beyond s_prev exists iff w exceeds the
    # zero-velocity (toughness) width at s_prev.
    w_k_prev = (kp / ep) * math.sqrt(s_prev) if s_prev > 0 else 0.0
    if kp > 0 and s_prev > 0 and w <= w_k_prev:
        return math.nan

    if mp == 0.0:
        return (w * ep / kp) ** 2  # closed form, velocity-independent

    def residual(s):
        v = max(0.0, (s - s_prev) / dt)
        wk3 = (kp / ep) ** 3 * s ** 1.5
        wm3 = BETA_M ** 3 * (mp * v / ep) * s ** 2
        return wk3 + wm3 - w ** 3

    lo = max(s_prev, 0.0)  # residual(lo) < 0 by the stagnation check above
    hi = max(lo,
             (w * ep / kp) ** 2 if kp > 0 else 0.0,
             (w ** 3 * ep * dt / (BETA_M ** 3 * mp)) ** (1.0 / 3.0),
             1e-30)
    for _ in range(300):
        if residual(hi) > 0.0:
            break
        hi *= 2.0
        if s_max is not None and hi > 4.0 * s_max:
            raise SolverError(
                f"tip inversion bracket exceeded cap {s_max}; w={w}, s_prev={s_prev}")
    else:
        raise SolverError("tip inversion failed to bracket a root")

    return brentq(residual, lo, hi, xtol=1e-300,
                  rtol=4 * np.finfo(float).eps, maxiter=200)


def sif_from_ribbon_width(w, s, e_prime):
    """Stress intensity factor from the LEFM width asymptote at distance s."""
    if s <= 0:
        raise ValueError("ribbon distance s must be positive")
    if w < 0:
        raise ValueError("width must be non-negative")
    return w * e_prime / (_SQRT_32_PI * math.sqrt(s))


def _chord_length(polygon, s_values, level, tangent, normal_s):
    """Extent of the polygon along the front-parallel direction at distance
    `level` behind the front line. polygon is (m, 2); s_values its vertex
    distances."""
    m = len(polygon)
    pts = []
    for a in range(m):
        b = (a + 1) % m
        sa, sb = s_values[a], s_values[b]
        if sa == level:
            pts.append(polygon[a])
        if (sa - level) * (sb - level) < 0.0:
            t = (level - sa) / (sb - sa)
            pts.append(polygon[a] + t * (polygon[b] - polygon[a]))
    if len(pts) < 2:
        return 0.0
    proj = [p @ tangent for p in pts]
    return max(proj) - min(proj)


def tip_cell_volume(polygon, normal, line_offset, params, velocity):
    """Volume of fluid in the wetted sub-polygon of a tip cell.

    polygon: (m, 2) vertices of the wetted region (behind the front line);
    normal: unit outward normal of the front segment; line_offset: c such
    that the distance behind the front is s(x) = c - normal.x >= 0 on the
    polygon. Integrates the tip width profile exactly in the transverse
    direction and by Gauss quadrature (in sqrt(s)) along the normal, which
    is exact for the pure toughness term.
    """
    polygon = np.asarray(polygon, dtype=float)
    if polygon.ndim != 2 or len(polygon) < 3:
        return 0.0
    normal = np.asarray(normal, dtype=float)
    tangent = np.array([-normal[1], normal[0]])
    s_vals = line_offset - polygon @ normal
    s_vals = np.maximum(s_vals, 0.0)
    if s_vals.max() <= 0.0:
        return 0.0

    levels = np.unique(s_vals)
    if levels[0] > 0.0:
        levels = np.concatenate([[0.0], levels])

    nodes, weights = np.polynomial.legendre.leggauss(24)
    total = 0.0
    for s_a, s_b in zip(levels[:-1], levels[1:]):
        if s_b - s_a <= 0.0:
            continue
        ell_a = _chord_length(polygon, s_vals, s_a, tangent, normal)
        ell_b = _chord_length(polygon, s_vals, s_b, tangent, normal)
        beta = (ell_b - ell_a) / (s_b - s_a)
        alpha = ell_a - beta * s_a
        # substitute s = u^2 so the sqrt(s) term integrates exactly
        u_a, u_b = math.sqrt(s_a), math.sqrt(s_b)
        u = 0.5 * (u_b - u_a) * nodes + 0.5 * (u_b + u_a)
        s = u * u
        integrand = tip_width(np.maximum(s, 1e-300), params, velocity) \
            * (alpha + beta * s) * 2.0 * u
        total += 0.5 * (u_b - u_a) * float(weights @ integrand)
    return max(total, 0.0)
