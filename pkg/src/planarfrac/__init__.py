"""planarfrac: planar 3D hydraulic fracture growth simulator.

Boundary-element elasticity coupled to finite-volume lubrication flow,
with implicit level-set front tracking through semi-infinite tip
asymptotics and a fast marching method, fracture closure handling and
domain-doubling remeshing. Ships semi-analytical radial and
height-contained solutions for verification.
"""

from . import elasticity, front, io, lubrication, mesh, reference, tip
from .controller import advance_step, init_from_analytical, remesh, run
from .errors import (ConfigError, PlanarFracError, SimulationAbort,
                     SolverError, StepFailure)
from .mesh import Mesh, build_mesh
from .properties import (Config, FluidProps, InjectionSchedule, MaterialProps,
                         SimParams, validate)
from .state import SimulationState

__version__ = "0.1.0"

__all__ = [
    "Config",
    "ConfigError",
    "FluidProps",
    "InjectionSchedule",
    "MaterialProps",
    "Mesh",
    "PlanarFracError",
    "SimParams",
    "SimulationAbort",
    "SimulationState",
    "SolverError",
    "StepFailure",
    "advance_step",
    "build_mesh",
    "elasticity",
    "front",
    "init_from_analytical",
    "io",
    "lubrication",
    "mesh",
    "reference",
    "remesh",
    "run",
    "tip",
    "validate",
]
