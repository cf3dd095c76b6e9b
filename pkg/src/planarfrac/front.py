"""Level-set front tracking on the Cartesian grid.

The front is carried as a signed distance sampled at cell centers (negative
inside the fracture). Ribbon-cell distances seed a first-order fast-marching
solve of |grad(phi)| = 1; the zero contour of the vertex-interpolated field
is then reconstructed as one linear segment per crossed cell (marching
squares, saddles split by the cell-center sign), which also yields the
wetted sub-polygons needed for tip volume prescription.
"""

import heapq
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from .mesh import interpolate_to_vertices

OUTSIDE, CHANNEL, RIBBON, TIP = 0, 1, 2, 3

STATUS_NAMES = {OUTSIDE: "outside", CHANNEL: "channel", RIBBON: "ribbon", TIP: "tip"}


def _march(mesh, seed_idx, seed_val, domain):
    """Ascending first-order FMM from frozen seeds over `domain` cells.

    Returns values for domain cells (+inf elsewhere/unreached). Seed values
    are preserved exactly and participate as accepted upwind data.
    """
    nx, ny = mesh.nx, mesh.ny
    n = nx * ny
    values = np.full(n, np.inf)
    accepted = np.zeros(n, dtype=bool)

    order = np.argsort(seed_idx, kind="stable")
    seed_idx = np.asarray(seed_idx)[order]
    seed_val = np.asarray(seed_val, dtype=float)[order]
    values[seed_idx] = seed_val
    accepted[seed_idx] = True

    hx2, hy2 = mesh.dx * mesh.dx, mesh.dy * mesh.dy

    def solve_cell(k):
        i, j = k % nx, k // nx
        best = np.inf
        cands = []
        mx = np.inf
        if i > 0 and accepted[k - 1]:
            mx = values[k - 1]
        if i < nx - 1 and accepted[k + 1]:
            mx = min(mx, values[k + 1])
        my = np.inf
        if j > 0 and accepted[k - nx]:
            my = values[k - nx]
        if j < ny - 1 and accepted[k + nx]:
            my = min(my, values[k + nx])
        if np.isfinite(mx):
            cands.append((mx, mesh.dx, hx2))
        if np.isfinite(my):
            cands.append((my, mesh.dy, hy2))
        if not cands:
            return np.inf
        if len(cands) == 2:
            (m1, _, h12), (m2, _, h22) = cands
            a = 1.0 / h12 + 1.0 / h22
            b = -2.0 * (m1 / h12 + m2 / h22)
            c = m1 * m1 / h12 + m2 * m2 / h22 - 1.0
            disc = b * b - 4.0 * a * c
            if disc >= 0.0:
                x = (-b + np.sqrt(disc)) / (2.0 * a)
                if x >= max(m1, m2):
                    best = x
        if not np.isfinite(best):
            best = min(m + h for m, h, _ in cands)
        return best

    heap = []
    trial_val = {}

    def update_neighbors(k):
        for nb in mesh.neighbors(k):
            if nb >= 0 and domain[nb] and not accepted[nb]:
                v = solve_cell(nb)
                if v < trial_val.get(nb, np.inf):
                    trial_val[nb] = v
                    heapq.heappush(heap, (v, nb))

    for k in seed_idx:
        update_neighbors(int(k))

    while heap:
        v, k = heapq.heappop(heap)
        if accepted[k] or v > trial_val.get(k, np.inf):
            continue
        values[k] = v
        accepted[k] = True
        update_neighbors(k)

    out = np.full(n, np.inf)
    out[domain & accepted] = values[domain & accepted]
    return out


def enclosed_by_ring(mesh, ring_cells):
    """Cells strictly enclosed by a ring of cells: the connected components
    of the complement that do not reach the grid boundary."""
    blocked = np.zeros(mesh.n_cells, dtype=bool)
    blocked[ring_cells] = True
    open_grid = (~blocked).reshape(mesh.ny, mesh.nx)
    labels, _ = ndimage.label(open_grid)  # 4-connectivity by default
    edge_labels = np.unique(np.concatenate([
        labels[0, :], labels[-1, :], labels[:, 0], labels[:, -1]]))
    edge_labels = edge_labels[edge_labels > 0]
    enclosed = open_grid & ~np.isin(labels, edge_labels)
    return enclosed.ravel()


def fast_march(mesh, seeds, inside=None):
    """Signed distance on the whole grid from seed cells with known values.

    seeds: mapping cell index -> signed distance, or (indices, values) pair.
    The region behind the seed ring gets a second, inward sweep so the
    signed distance keeps decreasing away from the front there. inside
    selects that region explicitly (boolean mask); by default it is derived
    topologically as everything the seed ring encloses.
    """
    if isinstance(seeds, dict):
        seed_idx = np.fromiter(seeds.keys(), dtype=int)
        seed_val = np.fromiter((seeds[k] for k in seed_idx), dtype=float)
    else:
        seed_idx = np.asarray(seeds[0], dtype=int)
        seed_val = np.asarray(seeds[1], dtype=float)
    if len(seed_idx) == 0:
        raise ValueError("fast_march requires a non-empty seed set")

    n = mesh.n_cells
    inside_mask = np.zeros(n, dtype=bool)
    if inside is None:
        inside_mask[:] = enclosed_by_ring(mesh, seed_idx)
    else:
        inside_mask[:] = inside
    inside_mask[seed_idx] = False

    outward_domain = ~inside_mask
    phi = _march(mesh, seed_idx, seed_val, outward_domain)

    if inside_mask.any():
        seed_mask = np.zeros(n, dtype=bool)
        seed_mask[seed_idx] = True
        u = _march(mesh, seed_idx, -seed_val, inside_mask | seed_mask)
        phi[inside_mask] = -u[inside_mask]

    phi[seed_idx] = seed_val
    return phi


@dataclass
class FrontSegment:
    """One linear piece of the reconstructed front inside a tip cell."""

    cell: int
    p0: np.ndarray
    p1: np.ndarray
    normal: np.ndarray          # unit, points toward positive phi (outside)
    angle: float                # atan2 of the normal
    fill_fraction: float        # wetted area of this piece / cell area
    center_distance: float      # distance of the cell center behind the line
    polygon: np.ndarray = field(repr=False)  # wetted sub-polygon (m, 2)

    @property
    def line_offset(self):
        """c such that distance behind the front is s(x) = c - normal.x."""
        return float(self.normal @ self.p0)


def _poly_area(poly):
    x = poly[:, 0]
    y = poly[:, 1]
    return 0.5 * abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def _make_segment(cell, pa, pb, wet_poly, cell_area, center):
    poly = np.asarray(wet_poly, dtype=float)
    area = _poly_area(poly)
    d = pb - pa
    norm = np.hypot(d[0], d[1])
    if norm == 0.0 or area <= 0.0:
        return None
    n = np.array([d[1], -d[0]]) / norm
    centroid = poly.mean(axis=0)
    mid = 0.5 * (pa + pb)
    if n @ (centroid - mid) > 0.0:  # normal must point away from the wetted side
        n = -n
    c = n @ pa
    return FrontSegment(
        cell=int(cell), p0=pa, p1=pb, normal=n,
        angle=float(np.arctan2(n[1], n[0])),
        fill_fraction=float(area / cell_area),
        center_distance=float(c - n @ center),
        polygon=poly,
    )


def reconstruct_front(mesh, phi):
    """Piecewise-linear front from the zero contour of vertex-interpolated phi.

    Returns a list of FrontSegment, at most one per cell except for saddle
    cells which contribute two; the wetted region of a saddle follows the
    sign of the cell-centered level set.
    """
    vphi = interpolate_to_vertices(mesh, phi)
    corner_phi = vphi[mesh.cell_vertices]       # (n, 4): SW, SE, NE, NW
    inside = corner_phi < 0.0
    code = (inside[:, 0] * 1 + inside[:, 1] * 2 +
            inside[:, 2] * 4 + inside[:, 3] * 8)
    candidates = np.nonzero((code != 0) & (code != 15))[0]

    corners_xy = mesh.vertex_coords[mesh.cell_vertices]  # (n, 4, 2)
    segments = []
    for k in candidates:
        cp = corner_phi[k]
        xy = corners_xy[k]
        center = mesh.cell_centers[k]

        # crossings on edges SW-SE (0), SE-NE (1), NE-NW (2), NW-SW (3)
        cross = {}
        for e in range(4):
            a, b = e, (e + 1) % 4
            fa, fb = cp[a], cp[b]
            if (fa < 0.0) != (fb < 0.0):
                t = fa / (fa - fb)
                cross[e] = xy[a] + t * (xy[b] - xy[a])

        ck = code[k]
        if ck in (5, 10):  # saddle: opposite corners inside
            if ck == 5:   # SW, NE inside
                tri = [(3, 0, [0]), (1, 2, [2])]   # (edge_a, edge_b, corner ids)
                hexa = [(0, 1, [2, 0]), (2, 3, [0, 2])]
            else:         # SE, NW inside
                tri = [(0, 1, [1]), (2, 3, [3])]
                hexa = [(1, 2, [3, 1]), (3, 0, [1, 3])]
            if phi[k] < 0.0:
                # center wetted: cut off the two dry corners; split the
                # hexagon along the wet diagonal, one quad per segment
                for ea, eb, cids in hexa:
                    quad = [xy[cids[0]], cross[ea], cross[eb], xy[cids[1]]]
                    seg = _make_segment(k, cross[ea], cross[eb], quad,
                                        mesh.cell_area, center)
                    if seg:
                        segments.append(seg)
            else:
                # center dry: two wet corner triangles
                for ea, eb, cids in tri:
                    poly = [cross[ea], xy[cids[0]], cross[eb]]
                    seg = _make_segment(k, cross[ea], cross[eb], poly,
                                        mesh.cell_area, center)
                    if seg:
                        segments.append(seg)
            continue

        # single segment: walk the cell boundary collecting wet corners and
        # the two crossings in boundary order
        boundary = []
        for e in range(4):
            if inside[k, e]:
                boundary.append(("c", xy[e]))
            if e in cross:
                boundary.append(("x", cross[e]))
        pts = [p for tag, p in boundary]
        xs = [p for tag, p in boundary if tag == "x"]
        if len(xs) != 2:
            continue  # degenerate corner touch; no reconstructable segment
        seg = _make_segment(k, xs[0], xs[1], pts, mesh.cell_area, center)
        if seg:
            segments.append(seg)
    return segments


def classify_cells(mesh, segments, phi):
    """Status per cell: tip (has a segment), channel (center inside), ribbon
    (channel next to a tip), outside (rest)."""
    status = np.full(mesh.n_cells, OUTSIDE, dtype=np.uint8)
    status[np.asarray(phi) < 0.0] = CHANNEL
    tip_cells = np.unique([s.cell for s in segments]).astype(int) \
        if segments else np.empty(0, dtype=int)
    status[tip_cells] = TIP

    if len(tip_cells):
        tab = mesh.neighbor_table()
        nbrs = tab[tip_cells].ravel()
        nbrs = nbrs[nbrs >= 0]
        ribbon = nbrs[status[nbrs] == CHANNEL]
        status[ribbon] = RIBBON
    return status


def front_advanced_check(phi_old, phi_new, ribbon_cells, dx, tol):
    """Convergence of successive level-set estimates at the survey cells.

    The change is normalized by max(|phi_new|, dx) to stay finite near the
    zero contour. Returns (converged, max_relative_change).
    """
    ribbon_cells = np.asarray(ribbon_cells, dtype=int)
    if len(ribbon_cells) == 0:
        return True, 0.0
    new = np.asarray(phi_new)[ribbon_cells]
    old = np.asarray(phi_old)[ribbon_cells]
    change = np.abs(new - old) / np.maximum(np.abs(new), dx)
    m = float(change.max())
    return m <= tol, m


def chain_polyline(segments, tol=1e-9):
    """Order segment endpoints into closed loops; returns list of (m, 2) arrays."""
    if not segments:
        return []
    scale = max(abs(float(np.max([s.p1 for s in segments]))), 1.0)
    key = lambda p: (round(p[0] / (tol * scale)), round(p[1] / (tol * scale)))

    links = {}
    for idx, s in enumerate(segments):
        for end, p in ((0, s.p0), (1, s.p1)):
            links.setdefault(key(p), []).append((idx, end))

    used = [False] * len(segments)
    loops = []
    for start in range(len(segments)):
        if used[start]:
            continue
        used[start] = True
        loop = [segments[start].p0, segments[start].p1]
        cur = segments[start].p1
        while True:
            nxt = None
            for idx, end in links.get(key(cur), []):
                if not used[idx]:
                    nxt = (idx, end)
                    break
            if nxt is None:
                break
            idx, end = nxt
            used[idx] = True
            cur = segments[idx].p1 if end == 0 else segments[idx].p0
            loop.append(cur)
        loops.append(np.asarray(loop))
    return loops
