"""Cell-centered finite-volume operators for lubrication flow.

The flux stencil is the five-point central-difference form with edge
transmissivities K = w^3 / (12 mu f~), where the edge width (and Reynolds
number, when turbulence is on) is the arithmetic average of the two
neighboring cells. Edges leaving the footprint are sealed: the fluid front
coincides with the fracture front, so the normal flux vanishes there.
"""

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

_RE_LAMINAR = 2000.0
_RE_TURBULENT = 4000.0


def _haaland_darcy(re, rel_rough):
    """Explicit Haaland approximation of the turbulent Darcy friction factor."""
    re = np.maximum(re, 1e-12)
    inv_sqrt = -1.8 * np.log10((rel_rough / 3.7) ** 1.11 + 6.9 / re)
    return 1.0 / inv_sqrt ** 2


def friction_factor_reduced(re, rel_rough=0.0, enabled=True):
    """Reduced Fanning friction factor f~ multiplying the laminar resistance.

    Evaluated at the equivalent Reynolds number 4*Re/3; equals 1 in the
    laminar branch (and whenever turbulence is disabled), is >= 1 and
    continuous through a linear blend over the transition interval.
    """
    re = np.asarray(re, dtype=float)
    scalar = re.ndim == 0
    re = np.atleast_1d(re)
    out = np.ones_like(re)
    if enabled:
        re_eq = 4.0 * re / 3.0
        turb = _haaland_darcy(re_eq, rel_rough) * re_eq / 64.0
        full = re_eq >= _RE_TURBULENT
        out[full] = np.maximum(turb[full], 1.0)
        blend = (re_eq > _RE_LAMINAR) & ~full
        if np.any(blend):
            re_hi = np.full_like(re_eq[blend], _RE_TURBULENT)
            turb_hi = np.maximum(_haaland_darcy(re_hi, rel_rough) * re_hi / 64.0, 1.0)
            frac = (re_eq[blend] - _RE_LAMINAR) / (_RE_TURBULENT - _RE_LAMINAR)
            out[blend] = 1.0 + frac * (turb_hi - 1.0)
    return float(out[0]) if scalar else out


def edge_transmissivity(w_left, w_right, fluid, v_edge=0.0, w_rough=0.0):
    """Hydraulic transmissivity K at a cell edge [m^3/(Pa s)]."""
    w_e = 0.5 * (np.asarray(w_left, dtype=float) + np.asarray(w_right, dtype=float))
    w_e = np.maximum(w_e, 0.0)
    if fluid.turbulence:
        re = fluid.density * w_e * np.abs(v_edge) / fluid.viscosity
        with np.errstate(divide="ignore", invalid="ignore"):
            rr = np.where(w_e > 0, w_rough / np.maximum(w_e, 1e-300), 0.0)
        f = friction_factor_reduced(re, rr, enabled=True)
    else:
        f = 1.0
    return w_e ** 3 / (12.0 * fluid.viscosity * f)


@dataclass
class FluxOperators:
    """Per-step flux operators over the footprint, in footprint-local order."""

    A: sp.csr_matrix          # pressure coefficients [m/Pa], five-point, dt-scaled
    C: np.ndarray             # diagonal compressibility [m/Pa]
    G: np.ndarray             # gravity term [m]
    cells: np.ndarray         # global cell indices defining the local order


def assemble_fv(mesh, w, cells, fluid, dt, w_mid=None, edge_velocity=None,
                w_rough=0.0, gravity=0.0):
    """Assemble flux operators for the given footprint.

    w: full-grid width (current iterate; transmissivities are evaluated on
    it). w_mid: widths for the compressibility diagonal (defaults to w).
    edge_velocity: optional (vx_right_edge, vy_top_edge) full-grid arrays of
    fluid speed estimates used only when turbulence is enabled.
    """
    cells = np.asarray(cells, dtype=int)
    n = len(cells)
    loc = np.full(mesh.n_cells, -1, dtype=int)
    loc[cells] = np.arange(n)

    i = cells % mesh.nx
    j = cells // mesh.nx

    rows, cols, vals = [], [], []
    grav = np.zeros(n)

    def add_edges(mask_pair, nb_offset, h2, axis):
        left = cells[mask_pair]
        right = left + nb_offset
        w_l, w_r = w[left], w[right]
        if edge_velocity is not None and fluid.turbulence:
            v = edge_velocity[axis][left]
        else:
            v = 0.0
        k_edge = edge_transmissivity(w_l, w_r, fluid, v, w_rough)
        coef = dt / h2 * k_edge
        ll, rr = loc[left], loc[right]
        rows.extend([ll, rr, ll, rr])
        cols.extend([rr, ll, ll, rr])
        vals.extend([coef, coef, -coef, -coef])
        return left, right, k_edge

    # x edges: cell k and k+1 both in footprint
    has_right = (i < mesh.nx - 1)
    mask = has_right.copy()
    mask[has_right] = loc[cells[has_right] + 1] >= 0
    add_edges(mask, 1, mesh.dx * mesh.dx, 0)

    # y edges: cell k and k+nx both in footprint
    has_top = (j < mesh.ny - 1)
    mask = has_top.copy()
    mask[has_top] = loc[cells[has_top] + mesh.nx] >= 0
    bot, top, k_edge = add_edges(mask, mesh.nx, mesh.dy * mesh.dy, 1)
    if gravity != 0.0:
        g_term = dt / mesh.dy * k_edge * fluid.density * gravity
        np.add.at(grav, loc[bot], g_term)
        np.add.at(grav, loc[top], -g_term)

    if rows:
        A = sp.csr_matrix(
            (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
            shape=(n, n))
    else:
        A = sp.csr_matrix((n, n))

    w_c = w_mid if w_mid is not None else w
    C = fluid.compressibility * np.maximum(w_c[cells], 0.0)
    return FluxOperators(A, C, grav, cells)


def leakoff_increment(c_l, t_now, dt, t_trigger, suppress=None):
    """Leaked width per cell over [t_now, t_now + dt].

    Exact time integral of the Carter flux through both fracture faces:
    4 C_L (sqrt(t+dt-t0) - sqrt(t-t0)), counting only time past the trigger.
    Cells with an unset trigger (inf) or in `suppress` leak nothing.
    """
    c_l = np.asarray(c_l, dtype=float)
    t0 = np.asarray(t_trigger, dtype=float)
    with np.errstate(invalid="ignore"):
        hi = np.sqrt(np.maximum(t_now + dt - t0, 0.0))
        lo = np.sqrt(np.maximum(t_now - t0, 0.0))
    out = np.where(np.isfinite(t0), 4.0 * c_l * (hi - lo), 0.0)
    if suppress is not None:
        out = np.where(suppress, 0.0, out)
    return out


def source_vector(mesh, schedule, t_now, dt, footprint_status=None):
    """Injected width per cell over the step (nonzero in the source cell only)."""
    src = mesh.locate(*schedule.location)
    vol = schedule.volume_between(t_now, t_now + dt)
    out = np.zeros(mesh.n_cells)
    if vol != 0.0:
        if footprint_status is not None and footprint_status[src] == 0:
            raise ValueError("injection source cell lies outside the fracture footprint")
        out[src] = vol / mesh.cell_area
    return out
