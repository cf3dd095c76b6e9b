"""Time-stepping driver: front advance loop, adaptive dt, stagnation and
closure handling, remeshing, and the simulation lifecycle.

One accepted time step runs the front iteration: impose tip volumes on a
trial front from the tip asymptote, solve the coupled width/pressure
system, invert the asymptote at the survey (ribbon) cells to locate the
new front, re-march the level set, and repeat until successive level-set
estimates at the survey cells agree (implicit and predictor-corrector
schemes) or exactly once (explicit scheme)."""

import math
from collections import deque

import numpy as np
from scipy.interpolate import RegularGridInterpolator
from scipy.spatial import cKDTree

from . import elasticity, reference, tip
from .ehl import complementarity_residual, solve_width_pressure
from .errors import ConfigError, PlanarFracError, SimulationAbort, SolverError, StepFailure
from .front import (CHANNEL, OUTSIDE, RIBBON, TIP, classify_cells, fast_march,
                    front_advanced_check, reconstruct_front)
from .lubrication import source_vector
from .state import SimulationState


class RemeshNeeded(PlanarFracError):
    """The front reached (or left) the computational domain."""


def init_from_analytical(mesh, material, fluid, injection, regime,
                         radius=None, time=None):
    """Fracture state sampled from a radial limiting-regime solution.

    The discrete widths are cell averages of the oracle profile, rescaled
    so the initial volume equals the injected volume exactly.
    """
    regime = regime.lower()
    src = np.asarray(injection.location, dtype=float)
    src_cell = mesh.locate(*src)
    q0 = injection.rate_at(0.0)
    if q0 <= 0:
        raise ConfigError(["analytical initialization needs a positive initial rate"])

    e_p = material.e_prime
    mu_p = 12.0 * fluid.viscosity
    k_p = tip.kprime_from_kic(float(material.k_ic[src_cell]))

    if regime == "m":
        if time is None:
            time = reference.radial_m_time_of_radius(radius, e_p, mu_p, q0)
        sample = reference.radial_m(time, e_p, mu_p, q0)
    elif regime == "k":
        if time is None:
            time = reference.radial_k_time_of_radius(radius, e_p, k_p, q0)
        sample = reference.radial_k(time, e_p, k_p, q0)
    else:
        raise ConfigError([f"unknown initialization regime '{regime}'"])

    r0 = sample.radius
    h = max(mesh.dx, mesh.dy)
    if r0 < 3.0 * h:
        raise ConfigError(
            [f"initial radius {r0:.3g} m under-resolved: needs >= 3 cells ({3*h:.3g} m)"])
    half = min(mesh.x_max - src[0], src[0] - mesh.x_min,
               mesh.y_max - src[1], src[1] - mesh.y_min)
    if r0 > 0.9 * half:
        raise ConfigError(
            [f"initial radius {r0:.3g} m does not fit the domain (half-extent {half:.3g} m)"])

    dist = np.hypot(mesh.cell_centers[:, 0] - src[0],
                    mesh.cell_centers[:, 1] - src[1])
    phi = dist - r0
    segments = reconstruct_front(mesh, phi)
    status = classify_cells(mesh, segments, phi)

    # cell-averaged width by 2x2 subsampling (captures partial tip cells)
    offs = np.array([[-0.25, -0.25], [0.25, -0.25], [-0.25, 0.25], [0.25, 0.25]])
    w = np.zeros(mesh.n_cells)
    for ox, oy in offs:
        rr = np.hypot(mesh.cell_centers[:, 0] + ox * mesh.dx - src[0],
                      mesh.cell_centers[:, 1] + oy * mesh.dy - src[1])
        w += 0.25 * sample.width(rr)
    w[status == OUTSIDE] = 0.0
    vol = w.sum() * mesh.cell_area
    if vol <= 0:
        raise ConfigError(["initial footprint carries no volume; refine the mesh"])
    w *= sample.volume / vol

    p = material.sigma0.copy()
    inside = status != OUTSIDE
    # keep the pressure sample away from the source log singularity and from
    # the negative near-tip singularity (tip cell centers can lie beyond R)
    r_eval = np.clip(dist[inside], 0.3 * min(mesh.dx, mesh.dy), 0.95 * r0)
    p[inside] += sample.net_pressure(r_eval)

    t_trig = np.full(mesh.n_cells, np.inf)
    passed = phi < 0.0
    t_trig[passed] = sample.trigger_time(dist[passed])

    v_front = np.zeros(mesh.n_cells)
    v_front[(status == RIBBON) | (status == TIP)] = sample.front_velocity

    return SimulationState(
        mesh=mesh, time=float(sample.time), w=w, p=p, phi=phi, status=status,
        active=np.zeros(mesh.n_cells, dtype=bool), wmax=w.copy(),
        t_trigger=t_trig, v_front=v_front,
        stagnant=np.zeros(mesh.n_cells, dtype=bool), segments=segments,
        injected=float(sample.volume), leaked=0.0)


def adapt_dt(state, sim, injection, dt_scale=1.0):
    """CFL-like step from the current front velocity, clipped to the user
    bounds and to the next schedule/snapshot/end breakpoint."""
    mesh = state.mesh
    v = state.max_front_velocity()
    if v > 0.0:
        dt = sim.cfl * min(mesh.dx, mesh.dy) / v
    else:
        dt = sim.dt_max
    dt *= dt_scale
    dt = min(max(dt, sim.dt_min), sim.dt_max)

    t = state.time
    events = [sim.end_time, injection.next_change_after(t)]
    events.extend(ts for ts in sim.snapshot_times if ts > t * (1 + 1e-12))
    horizon = min(e for e in events if e > t)
    dt = min(dt, horizon - t)
    if not np.isfinite(dt) or dt <= 0:
        raise SolverError(f"adapt_dt produced invalid dt={dt}")
    return dt


def _tip_corresponding_ribbon(mesh, tips, ribbons):
    """Nearest ribbon cell for each tip cell (deterministic tie-break)."""
    if len(ribbons) == 0 or len(tips) == 0:
        return np.full(len(tips), -1, dtype=int)
    tree = cKDTree(mesh.cell_centers[ribbons])
    _, idx = tree.query(mesh.cell_centers[tips], k=1)
    return ribbons[idx]


def _level_set_normals(mesh, phi, cells):
    """Front-normal unit vectors at the given cells from the level-set
    gradient (one-sided at the grid boundary)."""
    grid = phi.reshape(mesh.ny, mesh.nx)
    gy, gx = np.gradient(grid, mesh.dy, mesh.dx)
    nx = gx.ravel()[cells]
    ny = gy.ravel()[cells]
    norm = np.hypot(nx, ny)
    norm[norm == 0] = 1.0
    return np.column_stack([nx / norm, ny / norm])


def _imposed_tip_widths(mesh, segments, tips, band, phi, w_n, v_cell,
                        material, mu_prime, stagnant, k_i_ribbon,
                        tip_to_ribbon):
    """Prescribed width increments and hydraulic widths of the prescribed
    cells (front-cut tips followed by the inner band ring).

    The width increment carries the integrated tip-asymptote volume (for
    elasticity and mass bookkeeping). The hydraulic width used for edge
    transmissivities is the asymptote value at the deepest wetted point of
    the cell: the volume average under-represents the wedge at its inner
    edge and starves the near-front region.
    """
    by_cell = {}
    for seg in segments:
        by_cell.setdefault(seg.cell, []).append(seg)

    cells = np.concatenate([tips, band]).astype(int)
    normals = _level_set_normals(mesh, phi, band) if len(band) else None
    dw = np.empty(len(cells))
    w_flux = np.empty(len(cells))
    for n, cell in enumerate(cells):
        rib = tip_to_ribbon[n]
        if rib >= 0 and stagnant[rib]:
            params = tip.TipParams(material.e_prime,
                                   k_prime=tip.kprime_from_kic(k_i_ribbon[rib]),
                                   mu_prime=0.0)
            vel = 0.0
        else:
            params = tip.TipParams(material.e_prime,
                                   k_prime=tip.kprime_from_kic(float(material.k_ic[cell])),
                                   mu_prime=mu_prime)
            vel = float(v_cell[cell])
        if n < len(tips):
            vol = 0.0
            depth = 0.0
            for seg in by_cell.get(cell, ()):
                vol += tip.tip_cell_volume(seg.polygon, seg.normal,
                                           seg.line_offset, params, vel)
                depth = max(depth, float(np.max(
                    seg.line_offset - seg.polygon @ seg.normal)))
        else:
            # fully wetted band cell: integrate the asymptote over the whole
            # cell, with the distance field linearized from the level set
            nrm = normals[n - len(tips)]
            corners = mesh.vertex_coords[mesh.cell_vertices[cell]]
            center = mesh.cell_centers[cell]
            offset = float(nrm @ center - phi[cell])
            vol = tip.tip_cell_volume(corners, nrm, offset, params, vel)
            depth = float(offset - np.min(corners @ nrm))
        dw[n] = vol / mesh.cell_area - w_n[cell]
        w_flux[n] = float(tip.tip_width(depth, params, vel)) if depth > 0 else 0.0
    return dw, w_flux


def advance_step(state, mesh, material, fluid, injection, sim, elas, dt,
                 scheme=None):
    """Advance one time step; returns (new_state, diagnostics).

    Raises StepFailure when the coupled solve or the front iteration does
    not converge (the caller retries with a different dt) and RemeshNeeded
    when the trial front leaves the grid."""
    scheme = scheme or sim.scheme
    phi_n = state.phi
    w_n = state.w
    p_n = state.p
    t_now = state.time
    mu_prime = 0.0 if sim.inviscid else 12.0 * fluid.viscosity

    source_w = source_vector(mesh, injection, t_now, dt)
    src_cell = mesh.locate(*injection.location)

    def classify(phi):
        segs = reconstruct_front(mesh, phi)
        status = classify_cells(mesh, segs, phi)
        if not np.any(status == TIP):
            raise RemeshNeeded("front has no tip cells on the grid")
        return segs, status

    # (a) trial front
    if scheme == "implicit":
        phi_trial = phi_n.copy()
        segments_trial = list(state.segments)
        status_trial = state.status.copy()
        v_cell = state.v_front
    else:
        rib_prev = state.ribbon_cells()
        s_trial = np.maximum(-phi_n[rib_prev], 0.0) + state.v_front[rib_prev] * dt
        phi_trial = fast_march(mesh, (rib_prev, -s_trial))
        segments_trial, status_trial = classify(phi_trial)
        v_cell = np.maximum((phi_n - phi_trial) / dt, 0.0)

    h_min = min(mesh.dx, mesh.dy)
    band_depth = sim.tip_band_cells * h_min
    tab = mesh.neighbor_table()

    def partition(status, phi):
        """Solver partition: prescribed cells (front-cut tips plus the inner
        band ring where the single-step delivery cannot be resolved) and the
        survey cells just behind them."""
        tips = np.nonzero(status == TIP)[0]
        chan = (status == CHANNEL) | (status == RIBBON)
        band_mask = chan & (-phi < band_depth)
        band_mask[src_cell] = False
        band = np.nonzero(band_mask)[0]
        prescribed_mask = band_mask.copy()
        prescribed_mask[tips] = True
        nb = tab[np.nonzero(prescribed_mask)[0]].ravel()
        nb = nb[nb >= 0]
        survey_mask = np.zeros(mesh.n_cells, dtype=bool)
        survey_mask[nb] = True
        survey_mask &= chan & ~prescribed_mask
        return tips, band, np.nonzero(survey_mask)[0]

    # The survey (inversion) cells stay FROZEN for the whole step:
    # re-deriving them from every new trial front makes the iteration flip
    # between inconsistent rings.
    tips0, band0, survey = partition(status_trial, phi_trial)
    s_prev = -phi_n[survey]

    stagnant = state.stagnant.copy()
    k_i_ribbon = np.zeros(mesh.n_cells)
    diag = {"front_iterations": 0, "ehl_iterations": 0, "active_passes": 0}
    ribbon_params = None
    theta = sim.front_relax
    r_prev = None
    frozen = None

    for it in range(1, sim.max_front_iter + 1):
        diag["front_iterations"] = it
        if frozen is None:
            tips, band, _ = partition(status_trial, phi_trial)
            band = np.setdiff1d(band, survey)
        else:
            tips, band = frozen
        prescribed = np.concatenate([tips, band])
        chan_mask = (status_trial == CHANNEL) | (status_trial == RIBBON)
        chan_mask[band] = False
        channel_all = np.nonzero(chan_mask)[0]
        if status_trial[src_cell] == OUTSIDE:
            raise StepFailure("injection source cell left the footprint")
        tip_to_ribbon = _tip_corresponding_ribbon(mesh, prescribed, survey)

        dw_tip, w_flux_tip = _imposed_tip_widths(
            mesh, segments_trial, tips, band, phi_trial, w_n, v_cell,
            material, mu_prime, stagnant, k_i_ribbon, tip_to_ribbon)
        w_new, p_new, active_new, leak_w, stats = solve_width_pressure(
            mesh, elas, material, fluid, sim, dt, channel_all, prescribed,
            w_n, p_n, state.wmax, dw_tip, t_now, state.t_trigger, source_w,
            state.active, inviscid=sim.inviscid, gravity=sim.gravity,
            w_flux_tip=w_flux_tip)
        diag["ehl_iterations"] += stats["ehl_iterations"]
        diag["active_passes"] += stats["active_passes"]

        # (d) invert the tip asymptote at the survey cells
        s_new = np.empty(len(survey))
        stagnant_new = np.zeros(mesh.n_cells, dtype=bool)
        for n, rc in enumerate(survey):
            params = tip.TipParams(material.e_prime,
                                   k_prime=tip.kprime_from_kic(float(material.k_ic[rc])),
                                   mu_prime=mu_prime)
            w_r = w_new[rc]
            if w_r <= 0.0:
                s_val = math.nan
            else:
                s_val = tip.invert_tip_asymptote(
                    w_r, float(s_prev[n]), dt, params,
                    s_max=100.0 * math.hypot(mesh.dx, mesh.dy) + max(s_prev[n], 0.0))
            if math.isnan(s_val):
                stagnant_new[rc] = True
                s_new[n] = max(s_prev[n], 1e-30)
                k_i_ribbon[rc] = tip.sif_from_ribbon_width(
                    max(w_r, 0.0), max(s_prev[n], 1e-30), material.e_prime)
                if k_i_ribbon[rc] > material.k_ic[rc] * (1.0 + 1e-6):
                    raise StepFailure(
                        f"stagnant ribbon {rc} carries K_I > K_Ic; "
                        "front should have advanced")
            else:
                s_new[n] = max(s_val, s_prev[n])

        # (e) compare the inverted survey distances with the trial front;
        # seed values are preserved by the fast march, so the convergence
        # metric can be evaluated on them directly
        s_cur = -phi_trial[survey]
        change = np.abs(s_new - s_cur) / np.maximum(np.abs(s_new),
                                                    min(mesh.dx, mesh.dy))
        ls_change = float(change.max()) if len(change) else 0.0
        ls_ok = ls_change <= sim.front_tol

        ribbon_params = (survey, s_new, s_prev)
        stagnant = stagnant_new

        if scheme == "explicit" or ls_ok:
            break

        # (f) new trial front: relax the survey-distance update with an
        # Aitken step length (the raw front map oscillates), then re-march.
        # After a few passes the cell classification is frozen: cells
        # flickering between tip and channel change the system structure
        # discontinuously and keep a sub-cell limit cycle alive, while the
        # remaining (smooth) velocity/volume coupling converges cleanly.
        r = s_new - s_cur
        if r_prev is not None:
            dr = r - r_prev
            denom = float(dr @ dr)
            if denom > 0.0:
                theta = -theta * float(r_prev @ dr) / denom
            theta = min(max(theta, 0.05), 1.0)
        r_prev = r
        s_next = np.maximum(s_cur + theta * r, 0.0)
        phi_trial = fast_march(mesh, (survey, -s_next))
        if it < 6:
            segments_trial, status_trial = classify(phi_trial)
        elif frozen is None:
            frozen = (tips, band)
        v_cell = np.maximum((phi_n - phi_trial) / dt, 0.0)
    else:
        raise StepFailure(
            f"front iteration did not converge in {sim.max_front_iter} passes "
            f"(last level-set change {ls_change:.3e})")

    # (h) finalize on the accepted trial front
    survey, s_new, s_prev = ribbon_params
    new = state.copy()
    new.time = t_now + dt
    new.w = np.where(status_trial == OUTSIDE, 0.0, w_new)
    new.p = np.where(status_trial == OUTSIDE, material.sigma0, p_new)
    new.phi = phi_trial
    new.status = status_trial
    new.segments = segments_trial
    new.active = active_new
    new.wmax = np.maximum(state.wmax, new.w)
    new.stagnant = stagnant

    fresh = (phi_trial < 0.0) & ~np.isfinite(state.t_trigger)
    new.t_trigger = state.t_trigger.copy()
    new.t_trigger[fresh] = new.time

    # local front speed from the level-set displacement over the step,
    # defined wherever the new footprint needs it (ribbon and tip cells)
    moving = (status_trial == RIBBON) | (status_trial == TIP)
    v_front = np.zeros(mesh.n_cells)
    v_front[moving] = (phi_n[moving] - phi_trial[moving]) / dt
    if scheme == "explicit":
        v_front[survey] = (s_new - s_prev) / dt
    new.v_front = np.maximum(v_front, 0.0)

    leak_vol = float(leak_w.sum() * mesh.cell_area)
    inj_vol = float(source_w.sum() * mesh.cell_area)
    new.leaked = state.leaked + leak_vol
    new.injected = state.injected + inj_vol
    new.step_count = state.step_count + 1

    dvol = new.volume() - state.volume()
    denom = max(new.injected, 1e-30)
    diag["step_balance"] = abs(dvol + leak_vol - inj_vol) / max(inj_vol, 1e-30) \
        if inj_vol > 0 else abs(dvol + leak_vol)
    diag["global_balance"] = abs(new.volume() + new.leaked - new.injected) / denom
    diag["max_velocity"] = float(new.v_front.max())
    diag["stagnant_ribbons"] = int(stagnant[survey].sum()) if len(survey) else 0
    diag["complementarity"] = complementarity_residual(
        new.w, new.p, material.sigma0, elas,
        (new.status == CHANNEL) | (new.status == RIBBON), new.active,
        new.wmax, material.w_r)
    return new, diag


def remesh_trigger(state):
    """True when any tip cell sits in the outermost two rings of the grid."""
    mesh = state.mesh
    tips = state.tip_cells()
    if len(tips) == 0:
        return False
    i = tips % mesh.nx
    j = tips // mesh.nx
    return bool(np.any((i < 2) | (i >= mesh.nx - 2) | (j < 2) | (j >= mesh.ny - 2)))


def _axis_overlap(lo_new, h_new, n_new, lo_old, h_old, n_old):
    """(n_new, n_old) matrix of interval overlap lengths along one axis."""
    new_lo = lo_new + h_new * np.arange(n_new)[:, None]
    new_hi = new_lo + h_new
    old_lo = lo_old + h_old * np.arange(n_old)[None, :]
    old_hi = old_lo + h_old
    return np.clip(np.minimum(new_hi, old_hi) - np.maximum(new_lo, old_lo), 0.0, None)


def remesh(state, elas, material, factor=2.0):
    """Scale the domain by `factor` (same cell counts), conserving volume.

    Widths (and the historical maxima) are projected by exact area-weighted
    averaging; the level set is interpolated and the front rebuilt by fast
    marching; the elastic operator is rescaled in place of reassembly.
    """
    old = state.mesh
    mesh = old.scaled(factor)
    ox = _axis_overlap(mesh.x_min, mesh.dx, mesh.nx, old.x_min, old.dx, old.nx)
    oy = _axis_overlap(mesh.y_min, mesh.dy, mesh.ny, old.y_min, old.dy, old.ny)
    area_new = mesh.cell_area

    def conserve(field):
        grid = field.reshape(old.ny, old.nx)
        return (oy @ grid @ ox.T).ravel() / area_new

    def weighted_mean(field, weight, fallback):
        wgrid = weight.reshape(old.ny, old.nx)
        num = (oy @ ((field * weight).reshape(old.ny, old.nx)) @ ox.T).ravel()
        den = (oy @ wgrid @ ox.T).ravel()
        out = np.where(den > 0, num / np.maximum(den, 1e-300), fallback)
        return out

    vol_before = state.volume()
    w = conserve(state.w)
    wmax = conserve(state.wmax)

    mat_new = material.resample(mesh)
    in_foot = (state.status != OUTSIDE).astype(float)
    p = weighted_mean(state.p, in_foot, mat_new.sigma0)

    finite_t = np.isfinite(state.t_trigger).astype(float)
    t_safe = np.where(np.isfinite(state.t_trigger), state.t_trigger, 0.0)
    t_trig = weighted_mean(t_safe, finite_t, np.inf)

    # conserve() divides by the new cell area, so this is a covered fraction
    active = conserve(state.active.astype(float)) > 0.5

    # level set: interpolate, then rebuild by fast marching from a band
    yc = old.y_min + (np.arange(old.ny) + 0.5) * old.dy
    xc = old.x_min + (np.arange(old.nx) + 0.5) * old.dx
    rgi = RegularGridInterpolator((yc, xc), state.phi.reshape(old.ny, old.nx),
                                  bounds_error=False, fill_value=None)
    pts = np.column_stack([mesh.cell_centers[:, 1], mesh.cell_centers[:, 0]])
    inside_old = ((mesh.cell_centers[:, 0] > old.x_min) & (mesh.cell_centers[:, 0] < old.x_max)
                  & (mesh.cell_centers[:, 1] > old.y_min) & (mesh.cell_centers[:, 1] < old.y_max))
    phi_i = rgi(pts)
    phi_i[~inside_old] = np.inf

    band = inside_old & (np.abs(phi_i) <= 2.0 * max(mesh.dx, mesh.dy))
    if not np.any(band):
        raise SolverError("remesh could not locate the front on the new grid")
    seeds = np.nonzero(band)[0]
    phi = fast_march(mesh, (seeds, phi_i[seeds]))
    segments = reconstruct_front(mesh, phi)
    status = classify_cells(mesh, segments, phi)

    # keep stray projected volume: fold width outside the footprint into the
    # nearest footprint cell so the remesh conserves volume exactly
    outside = status == OUTSIDE
    stray = outside & (w > 0)
    foot_idx = np.nonzero(~outside)[0]
    if np.any(stray) and len(foot_idx):
        tree = cKDTree(mesh.cell_centers[foot_idx])
        _, near = tree.query(mesh.cell_centers[stray], k=1)
        np.add.at(w, foot_idx[near], w[stray])
        w[stray] = 0.0
    w[outside & (w != 0)] = 0.0
    wmax = np.maximum(wmax, w)
    p[outside] = mat_new.sigma0[outside]
    active &= ~outside

    # front velocities: nearest previous ribbon/tip estimate
    old_front = np.nonzero((state.status == RIBBON) | (state.status == TIP))[0]
    v_front = np.zeros(mesh.n_cells)
    new_front = np.nonzero((status == RIBBON) | (status == TIP))[0]
    if len(old_front) and len(new_front):
        tree = cKDTree(old.cell_centers[old_front])
        _, near = tree.query(mesh.cell_centers[new_front], k=1)
        v_front[new_front] = state.v_front[old_front][near]

    new_state = SimulationState(
        mesh=mesh, time=state.time, w=w, p=p, phi=phi, status=status,
        active=active, wmax=wmax, t_trigger=t_trig, v_front=v_front,
        stagnant=np.zeros(mesh.n_cells, dtype=bool), segments=segments,
        injected=state.injected, leaked=state.leaked,
        n_remesh=state.n_remesh + 1, step_count=state.step_count)

    vol_after = new_state.volume()
    if vol_before > 0 and abs(vol_after - vol_before) > 1e-6 * vol_before:
        raise SolverError(
            f"remesh volume drift {abs(vol_after - vol_before)/vol_before:.2e}")

    return new_state, elasticity.remesh_rescale(elas, factor), mat_new


def initial_state(cfg):
    """Build the starting state requested by cfg.sim.init."""
    init = dict(cfg.sim.init)
    regime = init.pop("regime", "m")
    return init_from_analytical(cfg.mesh, cfg.material, cfg.fluid,
                                cfg.injection, regime, **init)


def run(cfg, on_snapshot=None, on_checkpoint=None, fail_hook=None,
        initial=None):
    """Drive a simulation to its end time (or closure/abort).

    on_snapshot(state, diag) fires at configured snapshot times/steps plus
    once at the end; on_checkpoint(state, runner) at the checkpoint cadence.
    fail_hook(step_index) -> bool forces step failures (test hook).
    Returns (final_state, events) where events is a list of (kind, time).
    """
    sim = cfg.sim
    if initial is not None:
        state, runner = initial
        mesh = state.mesh
        material = cfg.material.resample(mesh) if state.n_remesh else cfg.material
    else:
        state = initial_state(cfg)
        mesh = state.mesh
        material = cfg.material
        runner = {"snapshot_index": 0, "emitted_times": [], "rollbacks": 0,
                  "last_rollback_time": None, "dt_scale": 1.0}
    elas = elasticity.assemble(mesh, material.e_prime)

    history = deque((s.copy() for s in runner.get("history", [])), maxlen=sim.history_depth)
    runner.pop("history", None)
    events = []
    eps = 1e-9

    def due_snapshot(st, diag):
        if on_snapshot is not None:
            on_snapshot(st, diag)
        runner["snapshot_index"] += 1
        runner["emitted_times"].append(st.time)

    def due_checkpoint(st):
        if on_checkpoint is not None:
            payload = dict(runner)
            payload["history"] = list(history)
            on_checkpoint(st, payload)

    if runner["snapshot_index"] == 0:
        due_snapshot(state, {})

    steps_this_run = 0
    diag = {}
    while True:
        if state.time >= sim.end_time * (1 - 1e-12):
            events.append(("end", state.time))
            break
        if sim.max_steps and steps_this_run >= sim.max_steps:
            events.append(("max_steps", state.time))
            break
        if state.fully_closed():
            events.append(("closed", state.time))
            break
        if sim.remesh and remesh_trigger(state):
            state, elas, material = remesh(state, elas, material, sim.remesh_factor)
            events.append(("remesh", state.time))
            history.clear()

        dt = adapt_dt(state, sim, cfg.injection, runner.get("dt_scale", 1.0))
        accepted = None
        diag = None
        forced_fail = bool(fail_hook and fail_hook(state.step_count))
        if not forced_fail:
            for fac in (1.0, 0.8, 1.25):
                try:
                    accepted, diag = advance_step(
                        state, mesh, material, cfg.fluid, cfg.injection, sim,
                        elas, dt * fac)
                    break
                except RemeshNeeded:
                    if not sim.remesh:
                        raise
                    state, elas, material = remesh(state, elas, material,
                                                   sim.remesh_factor)
                    events.append(("remesh", state.time))
                    history.clear()
                    dt = adapt_dt(state, sim, cfg.injection, runner.get("dt_scale", 1.0))
                except (StepFailure, SolverError):
                    continue

        if accepted is None:
            # retries exhausted: roll back a few accepted steps and shrink dt
            if runner.get("last_rollback_time") == state.time:
                runner["rollbacks"] += 1
            else:
                runner["rollbacks"] = 1
            runner["last_rollback_time"] = state.time
            if runner["rollbacks"] > 2 or not history:
                raise SimulationAbort(
                    f"time step at t={state.time:.6g}s failed after retries and rollbacks")
            state = history[0].copy()
            history.clear()
            runner["dt_scale"] = runner.get("dt_scale", 1.0) * 0.5
            runner["emitted_times"] = [t for t in runner["emitted_times"]
                                       if t <= state.time + eps]
            runner["snapshot_index"] = len(runner["emitted_times"])
            events.append(("rollback", state.time))
            continue

        runner["dt_scale"] = 1.0
        history.append(state)
        state = accepted
        steps_this_run += 1

        snap_due = (sim.snapshot_every_steps and
                    state.step_count % sim.snapshot_every_steps == 0)
        snap_due = snap_due or any(abs(state.time - ts) <= eps * max(ts, 1.0)
                                   for ts in sim.snapshot_times)
        if snap_due:
            due_snapshot(state, diag)
        if sim.checkpoint_every_steps and \
                state.step_count % sim.checkpoint_every_steps == 0:
            due_checkpoint(state)

    if not runner["emitted_times"] or \
            abs(runner["emitted_times"][-1] - state.time) > eps * max(state.time, 1.0):
        due_snapshot(state, diag or {})
    due_checkpoint(state)
    return state, events
