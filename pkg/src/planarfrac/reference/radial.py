"""Semi-analytical radial (penny-shaped) fracture solutions.

Viscosity-dominated regime: self-similar profiles frozen in _tables (see
tools/generate_similarity_tables.py); toughness-dominated regime: closed
form from the uniformly pressurized circular crack plus volume balance.
Only the defining conservation identities are trusted, and they are
re-verified in the test suite.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import _tables as T


@dataclass
class RadialSample:
    """State of a radial solution at one instant."""

    regime: str
    time: float
    radius: float
    front_velocity: float
    volume: float
    net_pressure_scale: float
    _width: callable = field(repr=False)
    _pressure: callable = field(repr=False)
    _trigger_exp: float = field(repr=False, default=1.0)

    def width(self, r):
        """Opening at radial distance(s) r from the source [m]."""
        return self._width(np.asarray(r, dtype=float))

    def net_pressure(self, r):
        """Net pressure p - sigma_0 at radial distance(s) r [Pa]."""
        return self._pressure(np.asarray(r, dtype=float))

    def trigger_time(self, r):
        """Time the front passed radius r (self-similar growth)."""
        r = np.asarray(r, dtype=float)
        return self.time * (np.minimum(r, self.radius) / self.radius) ** self._trigger_exp


def _m_pressure_dimless(rho):
    """Table net pressure with log tail at the source and the universal
    (1-rho)^(-1/3) viscous tail at the front."""
    rho = np.asarray(rho, dtype=float)
    out = np.interp(rho, T.RADIAL_M_RHO, T.RADIAL_M_P)
    lo = rho < T.RADIAL_M_RHO[0]
    if np.any(lo):
        out = np.where(
            lo,
            T.RADIAL_M_P[0] + T.RADIAL_M_KLOG *
            np.log(np.maximum(rho, 1e-300) / T.RADIAL_M_RHO[0]),
            out)
    hi = rho > T.RADIAL_M_RHO[-1]
    if np.any(hi):
        d_off = T.RADIAL_M_P[-1] - T.RADIAL_M_B_TIP * \
            (1.0 - T.RADIAL_M_RHO[-1]) ** (-1.0 / 3.0)
        out = np.where(
            hi,
            T.RADIAL_M_B_TIP * (1.0 - np.minimum(rho, 1 - 1e-9)) ** (-1.0 / 3.0) + d_off,
            out)
    return out


def radial_m(t, e_prime, mu_prime, q):
    """Zero-toughness, zero-leak-off radial solution at time t.

    R(t) = gamma_m (E' Q^3 t^4 / mu')^(1/9) with the frozen similarity
    profiles; the width integral equals Q t by construction.
    """
    if t <= 0 or mu_prime <= 0 or e_prime <= 0 or q <= 0:
        raise ValueError("radial_m requires positive t, E', mu', Q")
    length = (e_prime * q ** 3 * t ** 4 / mu_prime) ** (1.0 / 9.0)
    eps = (mu_prime / (e_prime * t)) ** (1.0 / 3.0)
    radius = T.RADIAL_M_GAMMA * length
    w_scale = eps * length
    p_scale = eps * e_prime

    def width(r):
        rho = np.asarray(r, dtype=float) / radius
        w = w_scale * np.interp(rho, T.RADIAL_M_RHO, T.RADIAL_M_W)
        return np.where(rho >= 1.0, 0.0, w)

    def pressure(r):
        rho = np.asarray(r, dtype=float) / radius
        return p_scale * _m_pressure_dimless(rho)

    return RadialSample(
        regime="m", time=float(t), radius=float(radius),
        front_velocity=float(4.0 / 9.0 * radius / t), volume=float(q * t),
        net_pressure_scale=float(p_scale),
        _width=width, _pressure=pressure, _trigger_exp=9.0 / 4.0)


def radial_m_time_of_radius(radius, e_prime, mu_prime, q):
    """Invert R(t) of the viscosity-dominated solution."""
    length = radius / T.RADIAL_M_GAMMA
    return (length ** 9 * mu_prime / (e_prime * q ** 3)) ** 0.25


def radial_k(t, e_prime, k_prime, q):
    """Zero-viscosity radial solution: uniform net pressure, elliptic width.

    Closed form from K_I = K_Ic on a circular crack plus volume balance;
    k_prime is the tip-scaling toughness sqrt(32/pi) K_Ic.
    """
    if t <= 0 or k_prime <= 0 or e_prime <= 0 or q <= 0:
        raise ValueError("radial_k requires positive t, E', K', Q")
    k_ic = k_prime * math.sqrt(math.pi / 32.0)
    radius = (3.0 * e_prime * q * t / (8.0 * math.sqrt(math.pi) * k_ic)) ** 0.4
    p_net = 0.5 * k_ic * math.sqrt(math.pi / radius)

    def width(r):
        rho = np.asarray(r, dtype=float) / radius
        w = (8.0 * p_net * radius / (math.pi * e_prime)) * \
            np.sqrt(np.maximum(1.0 - rho ** 2, 0.0))
        return w

    def pressure(r):
        return np.full_like(np.asarray(r, dtype=float), p_net)

    return RadialSample(
        regime="k", time=float(t), radius=float(radius),
        front_velocity=float(0.4 * radius / t), volume=float(q * t),
        net_pressure_scale=float(p_net),
        _width=width, _pressure=pressure, _trigger_exp=2.5)


def radial_k_time_of_radius(radius, e_prime, k_prime, q):
    """Invert R(t) of the toughness-dominated solution."""
    k_ic = k_prime * math.sqrt(math.pi / 32.0)
    return radius ** 2.5 * 8.0 * math.sqrt(math.pi) * k_ic / (3.0 * e_prime * q)


def leakoff_scaling_exponent(times, radii):
    """Log-log least-squares slope of a radius-vs-time series."""
    times = np.asarray(times, dtype=float)
    radii = np.asarray(radii, dtype=float)
    if len(times) < 5 or len(times) != len(radii):
        raise ValueError("need at least 5 matching (t, R) samples")
    if np.any(times <= 0) or np.any(radii <= 0):
        raise ValueError("samples must be positive for a log-log fit")
    slope, _ = np.polyfit(np.log(times), np.log(radii), 1)
    return float(slope)
