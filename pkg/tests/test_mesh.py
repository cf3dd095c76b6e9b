import numpy as np
import pytest

from planarfrac.errors import ConfigError
from planarfrac.mesh import build_mesh, interpolate_to_vertices, neighbors


def test_cell_sizes_square_domain():
    m = build_mesh((-5, 5, -5, 5), 41, 41)
    assert m.dx == pytest.approx(10 / 41, rel=1e-15)
    assert m.dy == pytest.approx(10 / 41, rel=1e-15)
    assert m.n_cells == 41 * 41


def test_cell_sizes_rectangular_domain():
    m = build_mesh((-20, 20, -2.3, 2.3), 125, 35)
    assert m.dx == pytest.approx(0.32, rel=1e-15)
    assert m.dy == pytest.approx(4.6 / 35, rel=1e-12)


def test_cell_center_formula():
    m = build_mesh((0, 1, 0, 1), 4, 4)
    for k in range(m.n_cells):
        i, j = m.ij(k)
        assert m.cell_centers[k, 0] == pytest.approx((i + 0.5) * m.dx)
        assert m.cell_centers[k, 1] == pytest.approx((j + 0.5) * m.dy)
    assert m.cell_centers[0] == pytest.approx([0.125, 0.125])
    assert m.cell_centers[-1] == pytest.approx([0.875, 0.875])


def test_invalid_mesh_rejected():
    with pytest.raises(ConfigError):
        build_mesh((1, -1, 0, 1), 5, 5)
    with pytest.raises(ConfigError):
        build_mesh((0, 1, 0, 1), 2, 5)
    err = None
    try:
        build_mesh((1, 0, 0, 0), 1, 1)
    except ConfigError as exc:
        err = exc
    assert err is not None and len(err.errors) == 4


def test_neighbor_counts_3x3():
    m = build_mesh((0, 3, 0, 3), 3, 3)
    center = m.index(1, 1)
    assert sum(nb >= 0 for nb in m.neighbors(center)) == 4
    assert sum(nb >= 0 for nb in m.neighbors(m.index(0, 0))) == 2
    assert sum(nb >= 0 for nb in m.neighbors(m.index(1, 0))) == 3
    assert neighbors(m, center) == m.neighbors(center)


def test_neighbors_symmetric():
    m = build_mesh((-1, 2, 0, 5), 7, 9)
    tab = m.neighbor_table()
    for k in range(m.n_cells):
        for nb in tab[k]:
            if nb >= 0:
                assert k in tab[nb]


def test_neighbors_out_of_range():
    m = build_mesh((0, 1, 0, 1), 3, 3)
    with pytest.raises(IndexError):
        m.neighbors(9)


def test_areas_sum_to_domain():
    m = build_mesh((-20, 20, -2.3, 2.3), 125, 35)
    assert m.n_cells * m.cell_area == pytest.approx(40 * 4.6, rel=1e-12)


def test_vertex_interpolation_constant_and_affine():
    m = build_mesh((-2, 3, -1, 4), 8, 6)
    const = np.full(m.n_cells, 3.5)
    assert np.allclose(interpolate_to_vertices(m, const), 3.5)

    field = 2.0 * m.cell_centers[:, 0] - 0.5 * m.cell_centers[:, 1] + 1.0
    vert = interpolate_to_vertices(m, field)
    # interior vertices reproduce the affine field exactly
    for iv in range(1, m.nx):
        for jv in range(1, m.ny):
            k = jv * (m.nx + 1) + iv
            x, y = m.vertex_coords[k]
            assert vert[k] == pytest.approx(2.0 * x - 0.5 * y + 1.0, rel=1e-13)


def test_vertex_interpolation_checkerboard():
    m = build_mesh((0, 4, 0, 4), 4, 4)
    i = np.arange(m.n_cells) % m.nx
    j = np.arange(m.n_cells) // m.nx
    field = np.where((i + j) % 2 == 0, 1.0, -1.0)
    vert = interpolate_to_vertices(m, field)
    for iv in range(1, m.nx):
        for jv in range(1, m.ny):
            assert vert[jv * (m.nx + 1) + iv] == pytest.approx(0.0, abs=1e-15)


def test_scaled_mesh():
    m = build_mesh((-5, 5, -4, 4), 11, 9)
    s = m.scaled(2.0)
    assert s.nx == m.nx and s.ny == m.ny
    assert s.dx == 2 * m.dx and s.dy == 2 * m.dy
    assert np.array_equal(s.cell_centers, 2.0 * m.cell_centers)
