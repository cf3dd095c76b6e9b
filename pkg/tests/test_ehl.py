import math

import numpy as np
import pytest

from planarfrac import ehl, elasticity
from planarfrac.errors import SolverError
from planarfrac.mesh import build_mesh
from planarfrac.properties import FluidProps, MaterialProps, SimParams

EP = 35.2e9


def make_setup(nx=21, half=1.0, radius=0.62, w0=1e-4, sigma0=1e6):
    mesh = build_mesh((-half, half, -half, half), nx, nx)
    elas = elasticity.assemble(mesh, EP)
    r = np.hypot(mesh.cell_centers[:, 0], mesh.cell_centers[:, 1])
    inside = r < radius
    w = np.where(inside, w0 * np.sqrt(np.maximum(1 - (r / radius) ** 2, 0)), 0.0)
    sig = np.full(mesh.n_cells, sigma0)
    p = sig + elas.apply(w)
    material = MaterialProps(EP, k_ic=np.zeros(mesh.n_cells),
                             c_l=np.zeros(mesh.n_cells), sigma0=sig)
    fluid = FluidProps(viscosity=1e-3)
    return mesh, elas, material, fluid, inside, w, p, r


def footprint_partitions(mesh, inside, r, radius):
    idx = np.nonzero(inside)[0]
    tip = idx[r[idx] > radius - 1.2 * mesh.dx]
    channel = np.setdiff1d(idx, tip)
    return channel, tip


def test_build_system_reduces_without_tip_and_active():
    mesh, elas, material, fluid, inside, w, p, r = make_setup()
    channel = np.nonzero(inside)[0]
    dt = 0.01
    src = np.zeros(mesh.n_cells)
    leak = np.zeros(mesh.n_cells)
    system = ehl.EhlSystem(mesh, elas, fluid, dt, channel, [], [],
                           w, p, np.zeros(0), np.zeros(0), src, leak)
    M, rhs = system.build(np.zeros(mesh.n_cells))
    nc = len(channel)
    assert M.shape == (nc, nc)
    # block equals I - L E restricted to the channel
    from planarfrac.lubrication import assemble_fv
    ops = assemble_fv(mesh, w, channel, fluid, dt)
    want = np.eye(nc) - ops.A.toarray() @ elas.block(channel, channel)
    assert np.allclose(M, want, rtol=1e-12)
    assert np.allclose(rhs, ops.A @ p[channel], rtol=1e-12)


def test_zero_dt_gives_zero_increment():
    mesh, elas, material, fluid, inside, w, p, r = make_setup()
    channel = np.nonzero(inside)[0]
    system = ehl.EhlSystem(mesh, elas, fluid, 1e-30, channel, [], [],
                           w, p, np.zeros(0), np.zeros(0),
                           np.zeros(mesh.n_cells), np.zeros(mesh.n_cells))
    sol = ehl.fixed_point_solve(system, tol=1e-6, max_iter=50)
    assert np.max(np.abs(sol.dw)) < 1e-18
    assert np.max(np.abs(sol.dp)) < 1e-6


def test_single_tip_cell_enters_rhs_and_its_row():
    mesh, elas, material, fluid, inside, w, p, r = make_setup()
    channel, tip = footprint_partitions(mesh, inside, r, 0.62)
    dw_tip = np.full(len(tip), 2e-5)
    system = ehl.EhlSystem(mesh, elas, fluid, 0.01, channel, tip, [],
                           w, p, dw_tip, np.zeros(0),
                           np.zeros(mesh.n_cells), np.zeros(mesh.n_cells))
    assert np.allclose(system.b_c, elas.block(channel, tip) @ dw_tip)
    M, rhs = system.build(system.imposed_dw())
    nc, nt = len(channel), len(tip)
    assert M.shape == (nc + nt, nc + nt)
    sol = ehl.fixed_point_solve(system, tol=1e-8, max_iter=100)
    assert np.allclose(sol.dw[tip], dw_tip)


def test_fixed_point_linear_problem_two_iterations():
    # tiny dt: the width change is negligible so L is effectively constant
    mesh, elas, material, fluid, inside, w, p, r = make_setup()
    channel = np.nonzero(inside)[0]
    src = np.zeros(mesh.n_cells)
    src[mesh.locate(0, 0)] = 1e-9
    system = ehl.EhlSystem(mesh, elas, fluid, 1e-8, channel, [], [],
                           w, p, np.zeros(0), np.zeros(0), src,
                           np.zeros(mesh.n_cells))
    sol = ehl.fixed_point_solve(system, tol=1e-6, max_iter=50)
    assert sol.iterations <= 2


def test_fixed_point_tolerance_infinite_returns_first_solve():
    mesh, elas, material, fluid, inside, w, p, r = make_setup()
    channel = np.nonzero(inside)[0]
    system = ehl.EhlSystem(mesh, elas, fluid, 0.01, channel, [], [],
                           w, p, np.zeros(0), np.zeros(0),
                           np.zeros(mesh.n_cells), np.zeros(mesh.n_cells))
    sol = ehl.fixed_point_solve(system, tol=math.inf, max_iter=50)
    assert sol.iterations == 1


def test_fixed_point_nonconvergence_raises():
    mesh, elas, material, fluid, inside, w, p, r = make_setup()
    channel = np.nonzero(inside)[0]
    src = np.zeros(mesh.n_cells)
    src[mesh.locate(0, 0)] = 1e-4
    system = ehl.EhlSystem(mesh, elas, fluid, 1.0, channel, [], [],
                           w, p, np.zeros(0), np.zeros(0), src,
                           np.zeros(mesh.n_cells))
    with pytest.raises(SolverError):
        ehl.fixed_point_solve(system, tol=1e-14, max_iter=2)


def test_step_volume_balance_exact():
    mesh, elas, material, fluid, inside, w, p, r = make_setup()
    channel, tip = footprint_partitions(mesh, inside, r, 0.62)
    dt = 0.05
    src = np.zeros(mesh.n_cells)
    src[mesh.locate(0, 0)] = 1e-3 * dt / mesh.cell_area
    leak = np.zeros(mesh.n_cells)
    leak[channel] = 1e-7
    dw_tip = np.full(len(tip), 1e-5)
    system = ehl.EhlSystem(mesh, elas, fluid, dt, channel, tip, [],
                           w, p, dw_tip, np.zeros(0), src, leak)
    sol = ehl.fixed_point_solve(system, tol=1e-10, max_iter=200)
    lhs = sol.dw.sum() * mesh.cell_area
    rhs = (src.sum() - leak[np.concatenate([channel, tip])].sum()) * mesh.cell_area
    assert lhs == pytest.approx(rhs, rel=1e-9)


def test_toughness_solve_penny_oracle():
    mesh, elas, material, fluid, inside, w, p, r = make_setup(nx=41, radius=0.6)
    idx = np.nonzero(inside)[0]
    radius = 0.6
    vol = 2.5e-4
    dw_c, dp = ehl.toughness_solve(elas, mesh, idx, np.zeros(0, dtype=int),
                                   np.zeros(0, dtype=int), np.zeros(0),
                                   np.zeros(0), vol)
    # uniformly pressurized circular crack: V = 16 p R^3 / (3 E'), with the
    # area-equivalent radius of the staircase footprint
    r_eff = math.sqrt(len(idx) * mesh.cell_area / math.pi)
    want = 3.0 * vol * EP / (16.0 * r_eff ** 3)
    assert dp == pytest.approx(want, rel=0.05)
    # linearity in the injected volume
    dw2, dp2 = ehl.toughness_solve(elas, mesh, idx, np.zeros(0, dtype=int),
                                   np.zeros(0, dtype=int), np.zeros(0),
                                   np.zeros(0), 2 * vol)
    assert dp2 == pytest.approx(2 * dp, rel=1e-10)
    assert np.allclose(dw2, 2 * dw_c, rtol=1e-8)
    # zero inflow, nothing prescribed: nothing happens
    dw0, dp0 = ehl.toughness_solve(elas, mesh, idx, np.zeros(0, dtype=int),
                                   np.zeros(0, dtype=int), np.zeros(0),
                                   np.zeros(0), 0.0)
    assert np.max(np.abs(dw0)) < 1e-18 and abs(dp0) < 1e-9


def test_update_active_set_add_and_release():
    mesh, elas, material, fluid, inside, w, p, r = make_setup()
    foot_open = inside.copy()
    wmax = np.maximum(w, 1e-5)
    w_r = 1e-6
    active = np.zeros(mesh.n_cells, dtype=bool)

    # all widths above the residual aperture: unchanged
    changed, new = ehl.update_active_set(elas, material.sigma0, w, p,
                                         foot_open, active, wmax, w_r)
    assert not changed

    # force one open cell below w_a: it joins the set
    k = np.nonzero(inside)[0][3]
    w2 = w.copy()
    w2[k] = 0.2e-6
    changed, new = ehl.update_active_set(elas, material.sigma0, w2, p,
                                         foot_open, active, wmax, w_r)
    assert changed and new[k]

    # pinned cell with fluid pressure far above the pinning traction: released
    active2 = np.zeros(mesh.n_cells, dtype=bool)
    active2[k] = True
    p2 = p.copy()
    p2[k] = material.sigma0[k] + float(elas.apply(w2, np.array([k]))[0]) + 1e6
    changed, new = ehl.update_active_set(elas, material.sigma0, w2, p2,
                                         foot_open, active2, wmax, w_r)
    assert changed and not new[k]


def test_solve_width_pressure_active_loop_complementarity():
    mesh, elas, material, fluid, inside, w, p, r = make_setup(w0=2e-6)
    channel, tip = footprint_partitions(mesh, inside, r, 0.62)
    sim = SimParams(end_time=1.0)
    wmax = np.maximum(w, 1e-6)
    # strong leak-off drains the fracture: some cells must close
    material.c_l[:] = 5e-5
    t_trig = np.where(inside, 0.0, np.inf)
    dt = 2.0
    w_new, p_new, active, leak_w, stats = ehl.solve_width_pressure(
        mesh, elas, material, fluid, sim, dt, channel, tip,
        w, p, wmax, np.zeros(len(tip)), 10.0, t_trig,
        np.zeros(mesh.n_cells), np.zeros(mesh.n_cells, dtype=bool))
    assert stats["active_passes"] >= 1
    w_a = ehl.residual_aperture(wmax, material.w_r)
    open_mask = np.zeros(mesh.n_cells, dtype=bool)
    open_mask[channel] = True
    res = ehl.complementarity_residual(w_new, p_new, material.sigma0, elas,
                                       open_mask, active, wmax, material.w_r)
    assert res <= 1e-9
    # pinned cells sit exactly at the residual aperture and leak nothing
    assert np.all(leak_w[active] == 0.0)
    if np.any(active):
        assert np.allclose(w_new[active], w_a[active], atol=1e-18)
