import math

import numpy as np
import pytest
from scipy.integrate import quad

from planarfrac import elasticity
from planarfrac.mesh import build_mesh

EP = 35.2e9


def finite_part_self(a, b):
    """Independent finite-part value of the 1/r^3 integral over the
    rectangle [-a,a]x[-b,b] at its center.

    Removing a disk of radius eps leaves 2*pi/eps - Int d(theta)/R(theta)
    with R the boundary distance; the finite part is the eps-free term.
    """

    def boundary_distance(theta):
        c, s = abs(math.cos(theta)), abs(math.sin(theta))
        return min(a / c if c > 0 else math.inf, b / s if s > 0 else math.inf)

    corner = math.atan2(b, a)
    breaks = [corner, math.pi - corner, math.pi + corner, 2 * math.pi - corner]
    val, _ = quad(lambda th: 1.0 / boundary_distance(th), 0.0, 2.0 * math.pi,
                  points=breaks, limit=400)
    return -val


def test_self_coefficient_closed_form():
    h = 0.25
    got = elasticity.rect_dd_coefficient(0.0, 0.0, h / 2, h / 2, EP)
    assert got == pytest.approx(math.sqrt(2.0) * EP / (math.pi * h), rel=1e-10)


def test_self_coefficient_vs_finite_part_quadrature():
    for a, b in [(0.5, 0.5), (0.16, 0.0657), (1.0, 0.25)]:
        got = elasticity.rect_dd_coefficient(0.0, 0.0, a, b, EP)
        want = -EP / (8.0 * math.pi) * finite_part_self(a, b)
        assert got == pytest.approx(want, rel=1e-9)


def test_far_field_point_dislocation_limit():
    a, b = 0.05, 0.03
    d = 20.0
    got = elasticity.rect_dd_coefficient(d, 0.0, a, b, EP)
    want = -EP / (8.0 * math.pi) * (4.0 * a * b) / d ** 3
    assert got == pytest.approx(want, rel=1e-3)
    assert got < 0.0


def test_kernel_symmetry_in_offsets():
    a, b = 0.2, 0.1
    for rx, ry in [(0.5, 0.7), (1.3, -0.4), (-2.0, 0.9)]:
        c0 = elasticity.rect_dd_coefficient(rx, ry, a, b, EP)
        assert c0 == pytest.approx(
            elasticity.rect_dd_coefficient(-rx, -ry, a, b, EP), rel=1e-14)
        assert c0 == pytest.approx(
            elasticity.rect_dd_coefficient(rx, -ry, a, b, EP), rel=1e-14)


def test_assemble_3x3_diagonal():
    m = build_mesh((0, 3, 0, 3), 3, 3)
    op = elasticity.assemble(m, EP)
    assert op.matrix.shape == (9, 9)
    want = math.sqrt(2.0) * EP / (math.pi * m.dx)
    assert np.allclose(np.diag(op.matrix), want, rtol=1e-12)


def test_block_toeplitz_and_symmetry():
    m = build_mesh((-1, 1, -1, 1), 6, 5)
    op = elasticity.assemble(m, EP)
    assert np.max(np.abs(op.matrix - op.matrix.T)) == 0.0
    # equal offsets carry equal entries
    k1, k2 = m.index(1, 1), m.index(3, 2)
    k3, k4 = m.index(2, 0), m.index(4, 1)
    assert op.matrix[k1, k2] == op.matrix[k3, k4]


def test_uniform_opening_traction_signs():
    # holding a flat uniform opening requires net pressure everywhere, with
    # the strongest demand at the patch boundary (edge-dislocation kink)
    m = build_mesh((-1, 1, -1, 1), 15, 15)
    op = elasticity.assemble(m, EP)
    w = np.ones(m.n_cells)
    traction = op.apply(w)
    center = m.index(7, 7)
    corner = m.index(0, 0)
    assert traction[center] > 0.0
    assert traction[corner] > traction[center]


def test_apply_zero_and_column():
    m = build_mesh((-1, 1, -1, 1), 5, 5)
    op = elasticity.assemble(m, EP)
    assert np.all(op.apply(np.zeros(m.n_cells)) == 0.0)
    w = np.zeros(m.n_cells)
    w[7] = 1.0
    assert np.array_equal(op.apply(w), op.matrix[:, 7])
    rows = np.array([2, 3])
    assert np.array_equal(op.apply(w, rows), op.matrix[rows, 7])


def test_penny_crack_pressure_recovery():
    # classical uniformly pressurized circular crack as an oracle
    m = build_mesh((-1, 1, -1, 1), 41, 41)
    op = elasticity.assemble(m, EP)
    radius = 0.8
    p0 = 1e6
    r = np.hypot(m.cell_centers[:, 0], m.cell_centers[:, 1])
    w = np.where(r < radius,
                 (8 * p0 * radius / (math.pi * EP)) *
                 np.sqrt(np.maximum(1 - (r / radius) ** 2, 0.0)), 0.0)
    rec = op.apply(w)
    interior = r < 0.8 * radius
    assert np.max(np.abs(rec[interior] - p0)) / p0 < 0.05


def test_remesh_rescale_factor2_bitwise():
    m = build_mesh((-5, 5, -4, 4), 9, 7)
    op = elasticity.assemble(m, EP)
    scaled = elasticity.remesh_rescale(op, 2.0)
    fresh = elasticity.assemble(m.scaled(2.0), EP)
    assert np.array_equal(scaled.matrix, fresh.matrix)
    assert scaled.dx == fresh.dx and scaled.dy == fresh.dy


def test_remesh_rescale_general_factor():
    m = build_mesh((-5, 5, -4, 4), 9, 7)
    op = elasticity.assemble(m, EP)
    scaled = elasticity.remesh_rescale(op, 1.5)
    fresh = elasticity.assemble(m.scaled(1.5), EP)
    assert np.allclose(scaled.matrix, fresh.matrix, rtol=1e-12, atol=0.0)
    ident = elasticity.remesh_rescale(op, 1.0)
    assert np.array_equal(ident.matrix, op.matrix)


def test_homogeneity_under_length_scaling():
    m = build_mesh((-2, 2, -1, 1), 8, 4)
    lam = 3.0
    a = elasticity.assemble(m, EP)
    b = elasticity.assemble(m.scaled(lam), EP)
    assert np.allclose(a.matrix / lam, b.matrix, rtol=1e-12)


def test_dump_reload_roundtrip(tmp_path):
    m = build_mesh((-1, 1, -1, 1), 6, 6)
    op = elasticity.assemble(m, EP)
    path = tmp_path / "elas.bin"
    elasticity.save(op, path)
    back = elasticity.load(path)
    assert np.array_equal(back.matrix, op.matrix)
    assert (back.nx, back.ny, back.dx, back.dy, back.e_prime) == \
        (op.nx, op.ny, op.dx, op.dy, op.e_prime)


def test_single_precision_mode():
    m = build_mesh((-1, 1, -1, 1), 5, 5)
    op = elasticity.assemble(m, EP, single_precision=True)
    assert op.matrix.dtype == np.float32
    full = elasticity.assemble(m, EP)
    assert np.allclose(op.matrix, full.matrix, rtol=1e-6)
