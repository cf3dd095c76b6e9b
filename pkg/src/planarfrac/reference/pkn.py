"""Height-contained fracture solution (fixed height h, local compliance).

Cross-sections are elliptic with w_max = 2 h p / E'; depth-averaging the
cubic flux law gives a non-linear diffusion equation for the inlet-plane
width whose similarity profile is frozen in _tables. Wing length grows as
t^(4/5), inlet width as t^(1/5); prefactors follow from the profile's ODE
constant and the volume identity.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _tables as T


@dataclass
class PknSample:
    time: float
    half_length: float
    inlet_width: float
    front_velocity: float
    volume: float
    height: float
    _width: callable = field(repr=False)

    def width(self, x):
        """Maximum (mid-height) opening at along-strike position(s) x [m]."""
        return self._width(np.asarray(x, dtype=float))


def pkn_prefactors(e_prime, mu, q, h):
    """(length, inlet width) prefactors lambda, B with l = lambda t^(4/5),
    w0 = B t^(1/5)."""
    if min(e_prime, mu, q, h) <= 0:
        raise ValueError("pkn requires positive E', mu, Q, h")
    lam = ((2.0 * q / (np.pi * h * T.PKN_J)) *
           (e_prime / (128.0 * mu * h * T.PKN_D)) ** (1.0 / 3.0)) ** 0.6
    b = (128.0 * mu * h * lam ** 2 * T.PKN_D / e_prime) ** (1.0 / 3.0)
    return lam, b


def pkn(t, e_prime, mu, q, h):
    """Height-contained solution at time t (no leak-off, both wings)."""
    if t <= 0:
        raise ValueError("pkn requires t > 0")
    lam, b = pkn_prefactors(e_prime, mu, q, h)
    length = lam * t ** 0.8
    w0 = b * t ** 0.2

    def width(x):
        eta = np.abs(np.asarray(x, dtype=float)) / length
        w = w0 * np.interp(eta, T.PKN_ETA, T.PKN_V)
        return np.where(eta >= 1.0, 0.0, w)

    return PknSample(
        time=float(t), half_length=float(length), inlet_width=float(w0),
        front_velocity=float(0.8 * length / t), volume=float(q * t),
        height=float(h), _width=width)
