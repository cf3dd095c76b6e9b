"""Fixed Cartesian grid of rectangular cells.

Cells are indexed row-major: flat index k = j*nx + i, with i the column
(x direction) and j the row (y direction). The center of cell (i, j) is
(x_min + (i + 1/2)*dx, y_min + (j + 1/2)*dy). Vertices use the same
convention on the (nx+1) x (ny+1) corner grid.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError


@dataclass(frozen=True)
class Mesh:
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int
    dx: float
    dy: float
    cell_centers: np.ndarray = field(repr=False)   # (n_cells, 2)
    vertex_coords: np.ndarray = field(repr=False)  # (n_vertices, 2)
    cell_vertices: np.ndarray = field(repr=False)  # (n_cells, 4) SW, SE, NE, NW

    @property
    def n_cells(self):
        return self.nx * self.ny

    @property
    def n_vertices(self):
        return (self.nx + 1) * (self.ny + 1)

    @property
    def cell_area(self):
        return self.dx * self.dy

    def index(self, i, j):
        """Flat index of cell (i, j)."""
        return j * self.nx + i

    def ij(self, k):
        """(i, j) of flat cell index k."""
        return k % self.nx, k // self.nx

    def neighbors(self, k):
        """Edge-adjacent cell indices (left, right, bottom, top); -1 if absent."""
        k = int(k)
        if not 0 <= k < self.n_cells:
            raise IndexError(f"cell index {k} out of range [0, {self.n_cells})")
        i, j = k % self.nx, k // self.nx
        return (
            k - 1 if i > 0 else -1,
            k + 1 if i < self.nx - 1 else -1,
            k - self.nx if j > 0 else -1,
            k + self.nx if j < self.ny - 1 else -1,
        )

    def neighbor_table(self):
        """(n_cells, 4) array of neighbor indices, -1 where missing."""
        nx, ny = self.nx, self.ny
        k = np.arange(self.n_cells)
        i = k % nx
        j = k // nx
        tab = np.stack([k - 1, k + 1, k - nx, k + nx], axis=1)
        tab[i == 0, 0] = -1
        tab[i == nx - 1, 1] = -1
        tab[j == 0, 2] = -1
        tab[j == ny - 1, 3] = -1
        return tab

    def locate(self, x, y):
        """Flat index of the cell containing point (x, y)."""
        i = int(np.clip((x - self.x_min) / self.dx, 0, self.nx - 1))
        j = int(np.clip((y - self.y_min) / self.dy, 0, self.ny - 1))
        return self.index(i, j)

    def scaled(self, factor):
        """A mesh with the same cell counts and all lengths multiplied by factor."""
        return build_mesh(
            (self.x_min * factor, self.x_max * factor,
             self.y_min * factor, self.y_max * factor),
            self.nx, self.ny,
        )


def build_mesh(extent, nx, ny):
    """Build the grid over extent = (x_min, x_max, y_min, y_max).

    Raises ConfigError for non-positive extents or cell counts below 3.
    """
    x_min, x_max, y_min, y_max = (float(v) for v in extent)
    errors = []
    if not x_max > x_min:
        errors.append(f"mesh: x_max ({x_max}) must exceed x_min ({x_min})")
    if not y_max > y_min:
        errors.append(f"mesh: y_max ({y_max}) must exceed y_min ({y_min})")
    if nx < 3:
        errors.append(f"mesh: nx ({nx}) must be >= 3")
    if ny < 3:
        errors.append(f"mesh: ny ({ny}) must be >= 3")
    if errors:
        raise ConfigError(errors)

    nx, ny = int(nx), int(ny)
    dx = (x_max - x_min) / nx
    dy = (y_max - y_min) / ny

    i = np.arange(nx)
    j = np.arange(ny)
    cx = x_min + (i + 0.5) * dx
    cy = y_min + (j + 0.5) * dy
    gx, gy = np.meshgrid(cx, cy)  # shape (ny, nx), row-major matches j*nx+i
    centers = np.column_stack([gx.ravel(), gy.ravel()])

    vi = np.arange(nx + 1)
    vj = np.arange(ny + 1)
    vx = x_min + vi * dx
    vy = y_min + vj * dy
    gvx, gvy = np.meshgrid(vx, vy)
    vertices = np.column_stack([gvx.ravel(), gvy.ravel()])

    # corner ordering: SW, SE, NE, NW
    k = np.arange(nx * ny)
    ii = k % nx
    jj = k // nx
    sw = jj * (nx + 1) + ii
    cell_vertices = np.stack([sw, sw + 1, sw + nx + 2, sw + nx + 1], axis=1)

    return Mesh(x_min, x_max, y_min, y_max, nx, ny, dx, dy,
                centers, vertices, cell_vertices)


def neighbors(mesh, cell):
    """Module-level alias for Mesh.neighbors."""
    return mesh.neighbors(cell)


def interpolate_to_vertices(mesh, field):
    """Cell-centered field -> vertex values by 4-cell arithmetic mean.

    Boundary vertices average whatever adjacent cells exist (2 on edges,
    1 at corners). Exact for affine fields at interior vertices.
    """
    field = np.asarray(field, dtype=float)
    if field.shape != (mesh.n_cells,):
        raise ValueError(f"field has shape {field.shape}, expected ({mesh.n_cells},)")
    grid = field.reshape(mesh.ny, mesh.nx)
    padded = np.full((mesh.ny + 2, mesh.nx + 2), np.nan)
    padded[1:-1, 1:-1] = grid
    stack = np.stack([
        padded[:-1, :-1], padded[:-1, 1:], padded[1:, :-1], padded[1:, 1:],
    ])
    with np.errstate(invalid="ignore"):
        vertex = np.nanmean(stack, axis=0)
    return vertex.ravel()
