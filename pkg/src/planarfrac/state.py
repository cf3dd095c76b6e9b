"""Mutable simulation state passed between time steps."""

import copy
from dataclasses import dataclass, field

import numpy as np

from .front import CHANNEL, OUTSIDE, RIBBON, TIP


@dataclass
class SimulationState:
    mesh: object
    time: float
    w: np.ndarray                 # width [m], zero outside the footprint
    p: np.ndarray                 # fluid pressure [Pa], sigma0 outside
    phi: np.ndarray               # signed distance to the front [m]
    status: np.ndarray            # OUTSIDE / CHANNEL / RIBBON / TIP per cell
    active: np.ndarray            # contact constraint active (mechanically closed)
    wmax: np.ndarray              # historical maximum width per cell
    t_trigger: np.ndarray         # leak-off trigger time, inf if front not yet past
    v_front: np.ndarray           # local front speed at ribbon/tip cells [m/s]
    stagnant: np.ndarray          # ribbon cells where the front is not moving
    segments: list                # FrontSegment list of the current front
    injected: float = 0.0         # cumulative injected volume [m^3]
    leaked: float = 0.0           # cumulative leaked volume [m^3]
    n_remesh: int = 0
    step_count: int = 0

    def footprint(self):
        return np.nonzero(self.status != OUTSIDE)[0]

    def channel_cells(self):
        """Open footprint cells excluding tips (ribbon is a channel subtype)."""
        return np.nonzero((self.status == CHANNEL) | (self.status == RIBBON))[0]

    def ribbon_cells(self):
        return np.nonzero(self.status == RIBBON)[0]

    def tip_cells(self):
        return np.nonzero(self.status == TIP)[0]

    def volume(self):
        return float(self.w.sum() * self.mesh.cell_area)

    def efficiency(self):
        return self.volume() / self.injected if self.injected > 0 else 1.0

    def max_front_velocity(self):
        rib = self.ribbon_cells()
        return float(self.v_front[rib].max()) if len(rib) else 0.0

    def fully_closed(self):
        """All open (non-tip) footprint cells are pinned at the residual aperture."""
        chan = self.channel_cells()
        return len(chan) > 0 and bool(np.all(self.active[chan]))

    def copy(self):
        return SimulationState(
            mesh=self.mesh,
            time=self.time,
            w=self.w.copy(),
            p=self.p.copy(),
            phi=self.phi.copy(),
            status=self.status.copy(),
            active=self.active.copy(),
            wmax=self.wmax.copy(),
            t_trigger=self.t_trigger.copy(),
            v_front=self.v_front.copy(),
            stagnant=self.stagnant.copy(),
            segments=list(self.segments),
            injected=self.injected,
            leaked=self.leaked,
            n_remesh=self.n_remesh,
            step_count=self.step_count,
        )
