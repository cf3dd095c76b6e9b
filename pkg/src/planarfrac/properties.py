"""Typed parameter bundles: material, fluid, injection and run control.

Spatially varying material fields accept three forms: a scalar, a layered
step function of y given as {"breaks": [...], "values": [...]} (len(values)
= len(breaks) + 1, value k applies for y <= breaks[k], the last value
above all breaks), or an explicit per-cell list. Layered/scalar specs are
kept alongside the resolved arrays so a remesh can re-sample them exactly.
"""

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import ConfigError
from .mesh import Mesh, build_mesh

SCHEMES = ("implicit", "explicit", "predictor-corrector")
FRICTION_MODELS = ("haaland",)


def resolve_field(spec, mesh, name, errors, minimum=None):
    """Resolve a scalar / layered / per-cell field spec to an array."""
    y = mesh.cell_centers[:, 1]
    if isinstance(spec, (int, float)):
        out = np.full(mesh.n_cells, float(spec))
    elif isinstance(spec, dict):
        breaks = np.asarray(spec.get("breaks", ()), dtype=float)
        values = np.asarray(spec.get("values", ()), dtype=float)
        if len(values) != len(breaks) + 1:
            errors.append(f"{name}: layered field needs len(values) == len(breaks)+1")
            return np.zeros(mesh.n_cells)
        if len(breaks) > 1 and np.any(np.diff(breaks) <= 0):
            errors.append(f"{name}: layer breaks must be strictly increasing")
            return np.zeros(mesh.n_cells)
        out = values[np.searchsorted(breaks, y, side="left")]
    else:
        arr = np.asarray(spec, dtype=float)
        if arr.shape != (mesh.n_cells,):
            errors.append(
                f"{name}: per-cell field needs {mesh.n_cells} entries, got {arr.size}")
            return np.zeros(mesh.n_cells)
        out = arr.copy()
    if minimum is not None and np.any(out < minimum):
        errors.append(f"{name} must be >= {minimum}")
    return out


@dataclass
class MaterialProps:
    e_prime: float                      # plane-strain modulus [Pa]
    k_ic: np.ndarray                    # fracture toughness per cell [Pa sqrt(m)]
    c_l: np.ndarray                     # Carter leak-off coefficient [m/sqrt(s)]
    sigma0: np.ndarray                  # in-situ confining stress [Pa]
    w_r: float = 1e-6                   # residual aperture on closure [m]
    w_rough: float = 0.0                # roughness length scale (turbulence) [m]
    grain_size: float | None = None     # accepted and stored; not used by any model
    raw: dict = dc_field(default_factory=dict, repr=False)

    def resample(self, mesh):
        """Re-resolve the stored field specs on a new (remeshed) grid."""
        errors = []
        mat = material_from_dict(self.raw, mesh, errors)
        if errors:
            raise ConfigError(errors)
        return mat


@dataclass
class FluidProps:
    viscosity: float                    # [Pa s]
    density: float = 1000.0             # [kg/m3]
    compressibility: float = 0.0        # [1/Pa]
    turbulence: bool = False
    friction_model: str = "haaland"

    @property
    def mu_prime(self):
        return 12.0 * self.viscosity


@dataclass
class InjectionSchedule:
    """Piecewise-constant rate history: rates[k] applies on [times[k], times[k+1])."""

    times: np.ndarray                   # strictly increasing, times[0] is start
    rates: np.ndarray                   # [m3/s], same length
    location: tuple = (0.0, 0.0)

    def rate_at(self, t):
        idx = np.searchsorted(self.times, t, side="right") - 1
        if idx < 0:
            return 0.0
        return float(self.rates[idx])

    def volume_between(self, t0, t1):
        """Exact integral of the rate history over [t0, t1]."""
        if t1 <= t0:
            return 0.0
        edges = np.concatenate([[t0], self.times[(self.times > t0) & (self.times < t1)], [t1]])
        vol = 0.0
        for a, b in zip(edges[:-1], edges[1:]):
            vol += self.rate_at(a) * (b - a)
        return vol

    def next_change_after(self, t):
        later = self.times[self.times > t]
        return float(later[0]) if len(later) else math.inf


@dataclass
class SimParams:
    end_time: float
    ehl_tol: float = 1e-6
    front_tol: float = 1e-3
    front_relax: float = 0.5
    tip_band_cells: float = 1.0
    max_ehl_iter: int = 100
    max_front_iter: int = 25
    max_active_passes: int = 50
    scheme: str = "predictor-corrector"
    cfl: float = 0.8
    dt_min: float = 0.0
    dt_max: float = math.inf
    snapshot_times: tuple = ()
    snapshot_every_steps: int = 0
    checkpoint_every_steps: int = 0
    remesh: bool = True
    remesh_factor: float = 2.0
    inviscid: bool = False
    gravity: float = 0.0               # gravitational acceleration along -y [m/s2]
    max_steps: int = 0                 # 0 = no cap
    history_depth: int = 5
    init: dict = dc_field(default_factory=dict)


@dataclass
class Config:
    mesh: Mesh
    material: MaterialProps
    fluid: FluidProps
    injection: InjectionSchedule
    sim: SimParams
    raw: dict = dc_field(default_factory=dict, repr=False)


def material_from_dict(raw, mesh, errors):
    e_prime = float(raw.get("e_prime", 0.0))
    if e_prime <= 0:
        errors.append("material.e_prime must be > 0")
    k_ic = resolve_field(raw.get("k_ic", 0.0), mesh, "material.k_ic", errors, minimum=0.0)
    c_l = resolve_field(raw.get("cl", 0.0), mesh, "material.cl", errors, minimum=0.0)
    sigma0 = resolve_field(raw.get("sigma0", 0.0), mesh, "material.sigma0", errors)
    w_r = float(raw.get("w_r", 1e-6))
    if w_r < 0:
        errors.append("material.w_r must be >= 0")
    w_rough = float(raw.get("w_rough", 0.0))
    grain = raw.get("grain_size")
    return MaterialProps(e_prime, k_ic, c_l, sigma0, w_r, w_rough,
                         None if grain is None else float(grain), dict(raw))


def validate(raw, strict=True):
    """Raw config dict -> validated Config; aggregates every violation."""
    errors = []
    known = {"mesh", "material", "fluid", "injection", "sim"}
    unknown = set(raw) - known
    if unknown:
        msg = f"unknown top-level section(s): {', '.join(sorted(unknown))}"
        if strict:
            errors.append(msg)

    mraw = raw.get("mesh", {})
    try:
        mesh = build_mesh(
            (mraw.get("x_min", -1.0), mraw.get("x_max", 1.0),
             mraw.get("y_min", -1.0), mraw.get("y_max", 1.0)),
            int(mraw.get("nx", 0)), int(mraw.get("ny", 0)))
    except ConfigError as exc:
        errors.extend(exc.errors)
        raise ConfigError(errors)

    material = material_from_dict(raw.get("material", {}), mesh, errors)

    fraw = raw.get("fluid", {})
    viscosity = float(fraw.get("viscosity", 0.0))
    if viscosity < 0:
        errors.append("fluid.viscosity must be >= 0")
    density = float(fraw.get("density", 1000.0))
    if density <= 0:
        errors.append("fluid.density must be > 0")
    c_f = float(fraw.get("compressibility", 0.0))
    if c_f < 0:
        errors.append("fluid.compressibility must be >= 0")
    friction = fraw.get("friction_model", "haaland")
    if friction not in FRICTION_MODELS:
        errors.append(f"fluid.friction_model must be one of {FRICTION_MODELS}")
    fluid = FluidProps(viscosity, density, c_f,
                       bool(fraw.get("turbulence", False)), friction)

    iraw = raw.get("injection", {})
    schedule_spec = iraw.get("schedule")
    if schedule_spec is None and "rate" in iraw:
        schedule_spec = [[0.0, iraw["rate"]]]
    if not schedule_spec:
        errors.append("injection.schedule (or injection.rate) is required")
        schedule_spec = [[0.0, 0.0]]
    times = np.asarray([row[0] for row in schedule_spec], dtype=float)
    rates = np.asarray([row[1] for row in schedule_spec], dtype=float)
    if np.any(np.diff(times) <= 0):
        errors.append("injection.schedule times must be strictly increasing")
    if np.any(rates < 0):
        errors.append("injection.schedule rates must be >= 0")
    loc = tuple(iraw.get("location", (0.0, 0.0)))
    if not (mesh.x_min < loc[0] < mesh.x_max and mesh.y_min < loc[1] < mesh.y_max):
        errors.append("injection.location must lie inside the mesh")
    injection = InjectionSchedule(times, rates, loc)

    sraw = dict(raw.get("sim", {}))
    if "end_time" not in sraw:
        errors.append("sim.end_time is required")
    known_sim = set(SimParams.__dataclass_fields__)
    unknown_sim = set(sraw) - known_sim
    if unknown_sim and strict:
        errors.append(f"unknown sim key(s): {', '.join(sorted(unknown_sim))}")
    for k in unknown_sim:
        sraw.pop(k)
    sraw.setdefault("end_time", 0.0)
    if "snapshot_times" in sraw:
        sraw["snapshot_times"] = tuple(float(v) for v in sraw["snapshot_times"])
    sim = SimParams(**sraw)
    for name in ("ehl_tol", "front_tol"):
        if getattr(sim, name) <= 0:
            errors.append(f"sim.{name} must be > 0")
    if sim.remesh_factor <= 1:
        errors.append("sim.remesh_factor must be > 1")
    if sim.scheme not in SCHEMES:
        errors.append(f"sim.scheme must be one of {SCHEMES}")
    if sim.cfl <= 0:
        errors.append("sim.cfl must be > 0")

    if errors:
        raise ConfigError(errors)
    return Config(mesh, material, fluid, injection, sim, dict(raw))


def config_to_dict(cfg):
    """Semantic round-trip of a validated Config back to plain data."""
    mesh = cfg.mesh
    out = {
        "mesh": {"x_min": mesh.x_min, "x_max": mesh.x_max,
                 "y_min": mesh.y_min, "y_max": mesh.y_max,
                 "nx": mesh.nx, "ny": mesh.ny},
        "material": dict(cfg.material.raw),
        "fluid": {"viscosity": cfg.fluid.viscosity,
                  "density": cfg.fluid.density,
                  "compressibility": cfg.fluid.compressibility,
                  "turbulence": cfg.fluid.turbulence,
                  "friction_model": cfg.fluid.friction_model},
        "injection": {"schedule": [[float(t), float(q)] for t, q in
                                   zip(cfg.injection.times, cfg.injection.rates)],
                      "location": list(cfg.injection.location)},
        "sim": {k: getattr(cfg.sim, k) for k in SimParams.__dataclass_fields__},
    }
    out["sim"]["snapshot_times"] = list(out["sim"]["snapshot_times"])
    return out
