"""Coupled elasto-hydrodynamic solve over one time step.

For a trial front position the unknowns are the width increments in the
open channel cells and the pressure increments in tip cells (width imposed
from the tip asymptote) and in cells with an active minimum-width contact
constraint (width pinned at the residual aperture). The non-linear
dependence of the flux operators on width is handled by a fixed-point
(Picard) iteration: each pass freezes the lubrication operator at the
previous width iterate and solves the resulting dense linear system.
"""

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .errors import SolverError
from .lubrication import assemble_fv, leakoff_increment

RELEASE_MARGIN = 1e-6  # fraction of sigma0 a closed cell must be unloaded by


@dataclass
class EhlSolution:
    dw: np.ndarray              # width increment, full grid
    dp: np.ndarray              # pressure increment, full grid
    iterations: int
    residual: float


class EhlSystem:
    """Step-constant data plus the per-iteration partitioned system builder.

    Local ordering is [channel, tip, active]; the channel block embeds the
    dense elasticity sub-matrix, tips and active cells only contribute
    through the lubrication operator and the prescribed width increments.
    """

    def __init__(self, mesh, elas, fluid, dt, channel, tip, active,
                 w_n, p_n, dw_tip, dw_active, source_w, leak_w,
                 gravity=0.0, w_rough=0.0, w_flux_tip=None):
        self.mesh = mesh
        self.elas = elas
        self.fluid = fluid
        self.dt = dt
        self.channel = np.asarray(channel, dtype=int)
        self.tip = np.asarray(tip, dtype=int)
        self.active = np.asarray(active, dtype=int)
        self.cells = np.concatenate([self.channel, self.tip, self.active])
        self.nc, self.nt, self.na = len(self.channel), len(self.tip), len(self.active)
        self.w_n = w_n
        self.p_n = p_n
        self.dw_tip = np.asarray(dw_tip, dtype=float)
        self.dw_active = np.asarray(dw_active, dtype=float)
        self.source_w = source_w
        self.leak_w = leak_w
        self.gravity = gravity
        self.w_rough = w_rough
        # hydraulic width of tip cells for transmissivity evaluation (the
        # volume-average width under-represents the wedge at its inner edge)
        if w_flux_tip is None:
            self.w_flux_tip = np.maximum(w_n[self.tip] + self.dw_tip, 0.0)
        else:
            self.w_flux_tip = np.asarray(w_flux_tip, dtype=float)

        # Grazed tip cells with a vanishing prescribed width cannot accept
        # volume through their w^3 edge resistance at any sane pressure;
        # drop those prescriptions (the cell opens on a later step). The
        # same applies to tips with no hydraulic path into the footprint.
        if self.nt:
            target = w_n[self.tip] + self.dw_tip
            floor = 1e-6 * max(float(np.max(target, initial=0.0)), 0.0)
            sliver = (w_n[self.tip] <= 0.0) & (target < floor)
            self.dw_tip[sliver] = 0.0
            self.w_flux_tip[sliver] = 0.0

            w_probe = w_n.copy()
            w_probe[self.tip] = self.w_flux_tip
            in_foot = np.zeros(mesh.n_cells, dtype=bool)
            in_foot[self.cells] = True
            tab = mesh.neighbor_table()[self.tip]
            for n, cell in enumerate(self.tip):
                if w_probe[cell] > 0.0:
                    continue
                nbs = tab[n]
                nbs = nbs[(nbs >= 0)]
                nbs = nbs[in_foot[nbs]]
                if not len(nbs) or np.all(w_probe[nbs] <= 0.0):
                    self.dw_tip[n] = 0.0

        self.E_cc = elas.block(self.channel, self.channel)
        # elastic load on channel rows from the imposed tip/active widths
        self.b_c = elas.block(self.channel, self.tip) @ self.dw_tip \
            + elas.block(self.channel, self.active) @ self.dw_active

    def imposed_dw(self):
        """Full-grid increment with only the prescribed tip/active parts set."""
        dw = np.zeros(self.mesh.n_cells)
        dw[self.tip] = self.dw_tip
        dw[self.active] = self.dw_active
        return dw

    def build(self, dw_iter):
        """Linear system (M, rhs) with flux operators frozen at dw_iter."""
        nc, nt, na = self.nc, self.nt, self.na
        w_full = np.maximum(self.w_n + dw_iter, 0.0)  # transmissivity input
        w_full[self.tip] = self.w_flux_tip
        ops = assemble_fv(self.mesh, w_full, self.cells, self.fluid,
                          self.dt, w_mid=np.maximum(self.w_n + 0.5 * dw_iter, 0.0),
                          w_rough=self.w_rough, gravity=self.gravity)
        L = (ops.A - sp.diags(ops.C)).tocsr()
        f_l = ops.A @ self.p_n[self.cells] + ops.G \
            + (self.source_w - self.leak_w)[self.cells]

        L_cc = L[:nc, :nc]
        L_tc = L[nc:nc + nt, :nc]
        L_ac = L[nc + nt:, :nc]

        n = nc + nt + na
        M = np.empty((n, n))
        M[:nc, :nc] = -(L_cc @ self.E_cc)
        M[:nc, :nc].flat[:: nc + 1] += 1.0
        M[:nc, nc:] = -L[:nc, nc:].toarray()
        if nt:
            M[nc:nc + nt, :nc] = -(L_tc @ self.E_cc)
            M[nc:nc + nt, nc:] = -L[nc:nc + nt, nc:].toarray()
        if na:
            M[nc + nt:, :nc] = -(L_ac @ self.E_cc)
            M[nc + nt:, nc:] = -L[nc + nt:, nc:].toarray()

        rhs = np.empty(n)
        rhs[:nc] = f_l[:nc] + L_cc @ self.b_c
        if nt:
            rhs[nc:nc + nt] = f_l[nc:nc + nt] - self.dw_tip + L_tc @ self.b_c
        if na:
            rhs[nc + nt:] = f_l[nc + nt:] - self.dw_active + L_ac @ self.b_c

        # hydraulically isolated tip/active cells leave an all-zero pressure
        # row; pin their increment at zero to keep the system regular
        if nt + na:
            sub = M[nc:, :]
            dead = np.nonzero(np.max(np.abs(sub), axis=1) == 0.0)[0]
            for r in dead:
                M[nc + r, nc + r] = 1.0
                rhs[nc + r] = 0.0
        return M, rhs

    def unpack(self, x):
        """Solution vector -> full-grid (dw, dp)."""
        nc, nt = self.nc, self.nt
        dw = self.imposed_dw()
        dw[self.channel] = x[:nc]
        dp = np.zeros(self.mesh.n_cells)
        dp[self.channel] = self.E_cc @ x[:nc] + self.b_c
        dp[self.tip] = x[nc:nc + nt]
        dp[self.active] = x[nc + nt:]
        return dw, dp


def fixed_point_solve(system, tol, max_iter, relax_after=10, relax=0.7):
    """Picard iteration on the partitioned system.

    Width and pressure convergence are tracked by separate relative L2 norms
    (their units differ by many orders of magnitude). A fixed under-relaxation
    kicks in after `relax_after` passes; on top of it an Aitken update adapts
    the step length, which tames the oscillatory modes of the w^3 coupling.
    """
    nc = system.nc
    x = np.zeros(nc + system.nt + system.na)
    dw_iter = system.imposed_dw()

    w_scale = max(np.linalg.norm(system.w_n[system.cells]), 1e-12)
    p_scale = max(np.linalg.norm(system.p_n[system.cells]), 1.0)

    res = np.inf
    theta = 1.0
    r_prev = None
    for it in range(1, max_iter + 1):
        M, rhs = system.build(dw_iter)
        try:
            x_f = np.linalg.solve(M, rhs)
        except np.linalg.LinAlgError as exc:
            raise SolverError(f"EHL linear solve failed: {exc}") from exc
        if not np.all(np.isfinite(x_f)):
            raise SolverError("EHL linear solve produced non-finite values")

        # convergence must be judged on the undamped fixed-point residual,
        # otherwise a small relaxation step masquerades as convergence
        r = x_f - x
        res_w = np.linalg.norm(r[:nc]) / max(np.linalg.norm(x_f[:nc]), tol * w_scale)
        res_p = np.linalg.norm(r[nc:]) / max(np.linalg.norm(x_f[nc:]), tol * p_scale)
        res = max(res_w, res_p) if (system.nt + system.na) else res_w
        if res <= tol:
            dw, dp = system.unpack(x_f)
            return EhlSolution(dw, dp, it, res)

        if r_prev is not None:
            dr = r - r_prev
            denom = float(dr @ dr)
            if denom > 0.0:
                theta = -theta * float(r_prev @ dr) / denom
            theta = min(max(theta, 0.05), 1.0)
        if it > relax_after:
            theta = min(theta, relax)
        x = x + theta * r
        r_prev = r
        dw_iter = system.imposed_dw()
        dw_iter[system.channel] = x[:nc]
    raise SolverError(
        f"EHL fixed point did not converge in {max_iter} iterations "
        f"(last residual {res:.3e})", residual=res)


def toughness_solve(elas, mesh, channel, tip, active, dw_tip, dw_active,
                    net_inflow_volume):
    """Inviscid limit: elasticity plus global volume balance with a single
    uniform pressure increment. Returns (dw_channel, dp_scalar)."""
    channel = np.asarray(channel, dtype=int)
    if len(channel) == 0:
        raise SolverError("toughness solve needs at least one open channel cell")
    E_cc = elas.block(channel, channel)
    b_c = elas.block(channel, tip) @ dw_tip + elas.block(channel, active) @ dw_active
    n = len(channel)
    area = mesh.cell_area
    M = np.empty((n + 1, n + 1))
    M[:n, :n] = E_cc
    M[:n, n] = -1.0
    M[n, :n] = area
    M[n, n] = 0.0
    rhs = np.empty(n + 1)
    rhs[:n] = -b_c
    rhs[n] = net_inflow_volume - area * (np.sum(dw_tip) + np.sum(dw_active))
    try:
        x = np.linalg.solve(M, rhs)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"toughness solve failed: {exc}") from exc
    return x[:n], float(x[n])


def residual_aperture(wmax, w_r):
    """Per-cell residual aperture w_a = min(max opening so far, w_r)."""
    return np.minimum(wmax, w_r)


def update_active_set(elas, sigma0, w_new, p_new, footprint_open,
                      active_mask, wmax, w_r):
    """One pass of the contact constraint bookkeeping.

    Cells whose width fell below the residual aperture join the set; closed
    cells whose pinning traction dropped below the local fluid pressure (by
    a small stress margin) are released. Returns (changed, new_active_mask).
    """
    w_a = residual_aperture(wmax, w_r)
    new_active = active_mask.copy()

    violate = footprint_open & ~active_mask & (w_new < w_a)
    new_active[violate] = True

    act = np.nonzero(active_mask)[0]
    if len(act):
        traction = sigma0[act] + elas.apply(w_new, act)
        margin = RELEASE_MARGIN * np.abs(sigma0[act])
        release = traction < p_new[act] - margin
        new_active[act[release]] = False

    return bool(np.any(new_active != active_mask)), new_active


def complementarity_residual(w, p, sigma0, elas, footprint_open, active_mask,
                             wmax, w_r):
    """Largest violation of the contact conditions on the open footprint [m].

    Open cells must satisfy w >= w_a; pinned cells satisfy w = w_a exactly
    and carry traction >= pressure by construction of the active-set loop,
    so the width violation is the whole discrete residual.
    """
    w_a = residual_aperture(wmax, w_r)
    viol = np.where(footprint_open & ~active_mask, np.maximum(w_a - w, 0.0), 0.0)
    return float(viol.max()) if viol.size else 0.0


def solve_width_pressure(mesh, elas, material, fluid, sim, dt,
                         channel_all, tip, w_n, p_n, wmax, dw_tip,
                         t_now, t_trigger, source_w, active_mask,
                         inviscid=False, gravity=0.0, w_flux_tip=None):
    """Full step solve: fixed point (or toughness path) inside an active-set loop.

    channel_all: open footprint cells excluding tips (ribbon included).
    Returns (w_new, p_new, active_mask, leak_w, stats).
    """
    footprint_open = np.zeros(mesh.n_cells, dtype=bool)
    footprint_open[channel_all] = True
    in_footprint = footprint_open.copy()
    in_footprint[tip] = True

    active_mask = active_mask.copy()
    total_iters = 0
    for outer in range(1, sim.max_active_passes + 1):
        act_idx = np.nonzero(active_mask)[0]
        chan_idx = channel_all[~active_mask[channel_all]]
        dw_active = residual_aperture(wmax[act_idx], material.w_r) - w_n[act_idx]

        leak_w = leakoff_increment(material.c_l, t_now, dt, t_trigger,
                                   suppress=active_mask | ~in_footprint)

        if inviscid:
            vol_in = float((np.sum(source_w) - np.sum(leak_w)) * mesh.cell_area)
            dw_c, dp_u = toughness_solve(elas, mesh, chan_idx, tip, act_idx,
                                         dw_tip, dw_active, vol_in)
            dw = np.zeros(mesh.n_cells)
            dw[chan_idx] = dw_c
            dw[tip] = dw_tip
            dw[act_idx] = dw_active
            dp = np.zeros(mesh.n_cells)
            dp[np.concatenate([chan_idx, tip, act_idx])] = dp_u
            iters = 1
        else:
            system = EhlSystem(mesh, elas, fluid, dt, chan_idx, tip, act_idx,
                               w_n, p_n, dw_tip, dw_active, source_w, leak_w,
                               gravity=gravity, w_rough=material.w_rough,
                               w_flux_tip=w_flux_tip)
            sol = fixed_point_solve(system, sim.ehl_tol, sim.max_ehl_iter)
            dw, dp = sol.dw, sol.dp
            iters = sol.iterations
        total_iters += iters

        w_new = w_n + dw
        p_new = p_n + dp
        changed, active_mask = update_active_set(
            elas, material.sigma0, w_new, p_new, footprint_open,
            active_mask, wmax, material.w_r)
        if not changed:
            stats = {"ehl_iterations": total_iters, "active_passes": outer}
            return w_new, p_new, active_mask, leak_w, stats
    raise SolverError(
        f"active set failed to settle within {sim.max_active_passes} passes")
