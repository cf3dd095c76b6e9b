import numpy as np
import pytest

from planarfrac import lubrication as lub
from planarfrac.mesh import build_mesh
from planarfrac.properties import FluidProps, InjectionSchedule


WATER = FluidProps(viscosity=1e-3)


def test_friction_factor_disabled_and_laminar():
    assert lub.friction_factor_reduced(1e6, enabled=False) == 1.0
    assert lub.friction_factor_reduced(0.0) == 1.0
    assert lub.friction_factor_reduced(100.0) == 1.0  # below transition


def test_friction_factor_turbulent_branch():
    f1 = lub.friction_factor_reduced(1e5)
    assert f1 > 1.0
    # matches f_turb * Re_eq / 64 with the Haaland evaluation
    re_eq = 4e5 / 3
    want = lub._haaland_darcy(re_eq, 0.0) * re_eq / 64.0
    assert f1 == pytest.approx(want, rel=1e-12)
    # monotone in Re, increases with roughness
    grid = np.geomspace(4e3, 1e8, 40)
    vals = lub.friction_factor_reduced(grid)
    assert np.all(np.diff(vals) > 0)
    assert lub.friction_factor_reduced(1e6, rel_rough=0.05) > \
        lub.friction_factor_reduced(1e6, rel_rough=0.0)


def test_friction_factor_continuous_transition():
    # linear blend across Re_eq in [2000, 4000]
    lo = lub.friction_factor_reduced(2000.0 * 3 / 4 * (1 + 1e-9))
    assert lo == pytest.approx(1.0, abs=1e-6)
    hi_minus = lub.friction_factor_reduced(4000.0 * 3 / 4 * (1 - 1e-9))
    hi_plus = lub.friction_factor_reduced(4000.0 * 3 / 4 * (1 + 1e-9))
    assert hi_minus == pytest.approx(hi_plus, rel=1e-6)


def test_edge_transmissivity_laminar():
    w = 1e-3
    k = lub.edge_transmissivity(w, w, WATER)
    assert k == pytest.approx(w ** 3 / (12 * WATER.viscosity), rel=1e-14)
    assert lub.edge_transmissivity(0.0, 0.0, WATER) == 0.0
    assert lub.edge_transmissivity(2 * w, 2 * w, WATER) == pytest.approx(8 * k)


def test_assemble_fv_constant_coefficient_stencil():
    m = build_mesh((0, 5, 0, 5), 5, 5)
    w = np.full(m.n_cells, 2e-3)
    cells = np.arange(m.n_cells)
    dt = 0.5
    ops = lub.assemble_fv(m, w, cells, WATER, dt)
    k = (2e-3) ** 3 / (12 * WATER.viscosity)
    a = ops.A.toarray()
    center = m.index(2, 2)
    assert a[center, center] == pytest.approx(-dt * k * (2 / m.dx ** 2 + 2 / m.dy ** 2))
    assert a[center, m.index(3, 2)] == pytest.approx(dt * k / m.dx ** 2)
    assert a[center, m.index(2, 3)] == pytest.approx(dt * k / m.dy ** 2)
    # zero row sums on interior rows, symmetry everywhere
    assert abs(a[center].sum()) < 1e-20
    assert np.max(np.abs(a - a.T)) == 0.0
    # uniform pressure: no flux anywhere (sealed domain boundary)
    p = np.full(m.n_cells, 3e6)
    assert np.max(np.abs(ops.A @ p[cells])) < 1e-9


def test_assemble_fv_footprint_edges_sealed():
    m = build_mesh((0, 5, 0, 5), 5, 5)
    w = np.full(m.n_cells, 1e-3)
    foot = np.array([m.index(1, 2), m.index(2, 2), m.index(3, 2)])
    ops = lub.assemble_fv(m, w, foot, WATER, 1.0)
    a = ops.A.toarray()
    # cross-footprint edges only: each row sums to zero (conservative), and
    # total mass is conserved for any pressure field
    p = np.array([1.0, 5.0, -2.0]) * 1e6
    assert abs((ops.A @ p).sum()) < 1e-12
    assert a[0, 1] > 0 and a[1, 2] > 0 and a[0, 2] == 0.0


def test_assemble_fv_gravity_term():
    m = build_mesh((0, 3, 0, 3), 3, 3)
    w = np.full(m.n_cells, 1e-3)
    cells = np.arange(m.n_cells)
    fluid = FluidProps(viscosity=1e-3, density=1000.0)
    dt = 2.0
    g = 9.81
    ops0 = lub.assemble_fv(m, w, cells, fluid, dt, gravity=0.0)
    assert np.all(ops0.G == 0.0)
    ops = lub.assemble_fv(m, w, cells, fluid, dt, gravity=g)
    k = (1e-3) ** 3 / (12e-3)
    # uniform widths: interior cells have K_up = K_down -> zero term;
    # bottom row keeps +K_up, top row -K_down
    assert ops.G[m.index(1, 1)] == pytest.approx(0.0, abs=1e-30)
    assert ops.G[m.index(1, 0)] == pytest.approx(dt / m.dy * k * 1000 * g, rel=1e-12)
    assert ops.G[m.index(1, 2)] == pytest.approx(-dt / m.dy * k * 1000 * g, rel=1e-12)
    assert ops.G.sum() == pytest.approx(0.0, abs=1e-12 * np.max(np.abs(ops.G)))


def test_compressibility_diagonal():
    m = build_mesh((0, 3, 0, 3), 3, 3)
    w = np.full(m.n_cells, 1e-3)
    fluid = FluidProps(viscosity=1e-3, compressibility=1e-9)
    ops = lub.assemble_fv(m, w, np.arange(m.n_cells), fluid, 1.0,
                          w_mid=np.full(m.n_cells, 2e-3))
    assert np.allclose(ops.C, 1e-9 * 2e-3)


def test_leakoff_increment_closed_forms():
    c_l = np.full(4, 5e-7)
    t0 = np.array([0.0, 100.0, np.inf, 150.0])
    out = lub.leakoff_increment(c_l, 100.0, 25.0, t0)
    assert out[0] == pytest.approx(4 * 5e-7 * (np.sqrt(125) - np.sqrt(100)), rel=1e-13)
    assert out[1] == pytest.approx(4 * 5e-7 * np.sqrt(25), rel=1e-13)  # fresh cell
    assert out[2] == 0.0
    assert out[3] == 0.0  # not yet triggered
    assert np.all(lub.leakoff_increment(np.zeros(4), 100.0, 25.0, t0) == 0.0)


def test_leakoff_telescoping_sum():
    c_l = np.array([1e-6])
    t0 = np.array([50.0])
    total = 0.0
    t = 50.0
    for dt in np.diff(np.geomspace(50.0, 5000.0, 200)):
        total += float(lub.leakoff_increment(c_l, t, dt, t0)[0])
        t += dt
    assert total == pytest.approx(4e-6 * np.sqrt(t - 50.0), rel=1e-9)


def test_leakoff_suppressed_cells():
    c_l = np.full(2, 1e-6)
    t0 = np.zeros(2)
    out = lub.leakoff_increment(c_l, 10.0, 1.0, t0, suppress=np.array([True, False]))
    assert out[0] == 0.0 and out[1] > 0.0


def test_source_vector():
    m = build_mesh((-5, 5, -5, 5), 41, 41)
    sched = InjectionSchedule(np.array([0.0]), np.array([0.01]), (0.0, 0.0))
    out = lub.source_vector(m, sched, 10.0, 1.0)
    src = m.locate(0.0, 0.0)
    assert out[src] == pytest.approx(0.01 * 1.0 / m.cell_area, rel=1e-13)
    assert np.count_nonzero(out) == 1

    # rate change mid-step integrates exactly across the breakpoint
    pulse = InjectionSchedule(np.array([0.0, 500.0]), np.array([2000.0, 0.0]),
                              (0.0, 0.0))
    out = lub.source_vector(m, pulse, 499.0, 2.0)
    assert out[src] * m.cell_area == pytest.approx(2000.0 * 1.0, rel=1e-12)

    zero = InjectionSchedule(np.array([0.0]), np.array([0.0]), (0.0, 0.0))
    assert np.all(lub.source_vector(m, zero, 0.0, 1.0) == 0.0)


def test_source_outside_footprint_rejected():
    m = build_mesh((-5, 5, -5, 5), 11, 11)
    sched = InjectionSchedule(np.array([0.0]), np.array([0.01]), (0.0, 0.0))
    status = np.zeros(m.n_cells, dtype=np.uint8)
    with pytest.raises(ValueError):
        lub.source_vector(m, sched, 0.0, 1.0, footprint_status=status)
