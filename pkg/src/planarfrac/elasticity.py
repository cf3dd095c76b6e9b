"""Dense boundary-element influence operator for a planar tensile crack.

A piecewise-constant opening on rectangular cells induces a normal traction
at every cell center. The operator maps the full-grid width vector to net
traction (fluid pressure minus far-field stress). Entries depend only on the
center offset and on (dx, dy, E'), so the matrix is symmetric block-Toeplitz;
assembly exploits this through an offset lookup table.
"""

import struct
from dataclasses import dataclass, field

import numpy as np

from .errors import PlanarFracError

_MAGIC = b"PFELAS01"


def rect_dd_coefficient(rx, ry, a, b, e_prime):
    """Normal traction at in-plane offset (rx, ry) from unit opening of a
    rectangle with half-lengths (a, b).

    Closed-form finite-part value of the 1/r^3 kernel integrated over the
    rectangle: a four-corner sum with alternating signs. Positive for the
    self term; decays like -E'*(4ab)/(8*pi*d^3) in the far field.
    """
    rx = np.asarray(rx, dtype=float)
    ry = np.asarray(ry, dtype=float)
    if a <= 0 or b <= 0:
        raise ValueError("element half-lengths must be positive")
    if e_prime <= 0:
        raise ValueError("plane-strain modulus must be positive")
    u1, u2 = rx - a, rx + a
    v1, v2 = ry - b, ry + b
    if np.any(u1 * u2 == 0.0) or np.any(v1 * v2 == 0.0):
        raise PlanarFracError(
            "evaluation point lies on an element edge line; kernel is singular there")

    def corner(u, v):
        return np.sqrt(u * u + v * v) / (u * v)

    total = corner(u2, v2) - corner(u1, v2) - corner(u2, v1) + corner(u1, v1)
    return e_prime / (8.0 * np.pi) * total


@dataclass
class ElasticInfluence:
    """Assembled full-grid influence matrix with its defining parameters."""

    matrix: np.ndarray = field(repr=False)
    e_prime: float
    nx: int
    ny: int
    dx: float
    dy: float
    single_precision: bool = False

    @property
    def n(self):
        return self.nx * self.ny

    def apply(self, w, rows=None):
        """Net traction p - sigma_0 on the given rows (default: all cells).

        w must vanish outside the fracture footprint; rows are typically the
        footprint cells.
        """
        w = np.asarray(w, dtype=float)
        if rows is None:
            return self.matrix @ w
        return self.matrix[rows] @ w

    def block(self, rows, cols):
        """Dense sub-block (float64 view-copy) used by the coupled solver."""
        return np.asarray(self.matrix[np.ix_(rows, cols)], dtype=float)


def _offset_table(mesh, e_prime):
    """Kernel values for all |di| <= nx-1, |dj| <= ny-1 center offsets."""
    a, b = mesh.dx / 2.0, mesh.dy / 2.0
    di = np.arange(mesh.nx, dtype=float) * mesh.dx
    dj = np.arange(mesh.ny, dtype=float) * mesh.dy
    rx, ry = np.meshgrid(di, dj)  # (ny, nx)
    return rect_dd_coefficient(rx, ry, a, b, e_prime)


def assemble(mesh, e_prime, single_precision=False):
    """Assemble the dense operator over every cell of the grid.

    The full grid (not just the current footprint) is assembled so that
    front growth and remeshing never require reassembly. Raises a MemoryError
    annotated with the required byte count when allocation fails.
    """
    n = mesh.n_cells
    itemsize = 4 if single_precision else 8
    required = n * n * itemsize
    dtype = np.float32 if single_precision else np.float64
    try:
        matrix = np.empty((n, n), dtype=dtype)
    except MemoryError as exc:
        raise MemoryError(
            f"elastic influence matrix needs {required} bytes "
            f"({n}x{n} cells at {itemsize} B/entry)") from exc

    table = _offset_table(mesh, e_prime)  # indexed by (|dj|, |di|)
    k = np.arange(n)
    i = k % mesh.nx
    j = k // mesh.nx
    adi = np.abs(i[:, None] - i[None, :])
    adj = np.abs(j[:, None] - j[None, :])
    matrix[:, :] = table[adj, adi]
    return ElasticInfluence(matrix, float(e_prime), mesh.nx, mesh.ny,
                            mesh.dx, mesh.dy, single_precision)


def apply(op, w, footprint=None):
    """Module-level alias for ElasticInfluence.apply."""
    return op.apply(w, footprint)


def remesh_rescale(op, factor):
    """Operator for the same grid with all lengths multiplied by factor.

    The kernel is homogeneous of degree -1 in length, so rescaling divides
    every entry by the factor. For factor 2 (the default remeshing factor)
    the result is bit-identical to reassembly on the scaled mesh.
    """
    if factor <= 0:
        raise ValueError("rescale factor must be positive")
    return ElasticInfluence(op.matrix / factor, op.e_prime, op.nx, op.ny,
                            op.dx * factor, op.dy * factor, op.single_precision)


def save(op, path):
    """Binary dump: fixed header (magic, nx, ny, dx, dy, E', precision) + raw entries."""
    header = _MAGIC + struct.pack(
        "<iiddd?", op.nx, op.ny, op.dx, op.dy, op.e_prime, op.single_precision)
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(np.ascontiguousarray(op.matrix).tobytes())


def load(path):
    """Reload an operator written by save()."""
    with open(path, "rb") as fh:
        magic = fh.read(len(_MAGIC))
        if magic != _MAGIC:
            raise PlanarFracError(f"{path}: not an elastic influence dump")
        nx, ny, dx, dy, e_prime, single = struct.unpack(
            "<iiddd?", fh.read(struct.calcsize("<iiddd?")))
        dtype = np.float32 if single else np.float64
        n = nx * ny
        data = np.frombuffer(fh.read(), dtype=dtype).reshape(n, n).copy()
    return ElasticInfluence(data, e_prime, nx, ny, dx, dy, single)
