"""Semi-analytical verification oracles."""

from .radial import (
    RadialSample,
    leakoff_scaling_exponent,
    radial_k,
    radial_k_time_of_radius,
    radial_m,
    radial_m_time_of_radius,
)
from .pkn import PknSample, pkn, pkn_prefactors

__all__ = [
    "RadialSample",
    "PknSample",
    "leakoff_scaling_exponent",
    "pkn",
    "pkn_prefactors",
    "radial_k",
    "radial_k_time_of_radius",
    "radial_m",
    "radial_m_time_of_radius",
]
