"""Voxel solids and their boundary surfaces.

A configuration voxelizes to unit cells on the integer lattice (blocks are
n x 1 x 1 cells). The boundary consists of the unit squares between an
occupied and an unoccupied cell; the half-space z < 0 counts as unoccupied,
so bottom faces are part of the surface. All coordinates stay integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import Configuration, Orientation
from .errors import SurfaceError

Cell = tuple[int, int, int]
Point = tuple[int, int, int]

__all__ = [
    "VoxelSet",
    "Face",
    "SurfaceComplex",
    "ValidationReport",
    "voxelize",
    "extract_boundary",
    "validate_closed_surface",
    "connected_components",
    "euler_characteristic",
    "solid_genus",
]


@dataclass(frozen=True)
class VoxelSet:
    """A finite set of occupied unit cells (x, y, z)."""

    occupied: frozenset[Cell]

    def __len__(self) -> int:
        return len(self.occupied)

    def bounds(self) -> tuple[Point, Point]:
        """(min corner, max corner) over occupied cells."""
        if not self.occupied:
            raise SurfaceError("empty voxel set has no bounds")
        xs, ys, zs = zip(*self.occupied)
        return (min(xs), min(ys), min(zs)), (max(xs), max(ys), max(zs))

    def grid(self) -> tuple[np.ndarray, Point]:
        """Occupancy as a bool array padded by one empty cell on every side.

        Returns (grid, origin): cell c is grid[c - origin + 1].
        """
        lo, hi = self.bounds()
        shape = tuple(h - l + 3 for l, h in zip(lo, hi))
        g = np.zeros(shape, dtype=bool)
        for (cx, cy, cz) in self.occupied:
            g[cx - lo[0] + 1, cy - lo[1] + 1, cz - lo[2] + 1] = True
        return g, lo


def voxelize(c: Configuration) -> VoxelSet:
    """Cells of the tower: level i at height z = i-1, slot j at offset j-1."""
    cells = set()
    for i, lv in enumerate(c.levels, start=1):
        z = i - 1
        along_x = Orientation.of_level(i) is Orientation.X
        for j in lv.slots():
            t = j - 1
            if along_x:
                cells.update((a, t, z) for a in range(c.n))
            else:
                cells.update((t, a, z) for a in range(c.n))
    return VoxelSet(frozenset(cells))


@dataclass(frozen=True)
class Face:
    """One unit square of the boundary, corners ordered so the normal points out."""

    corners: tuple[Point, Point, Point, Point]
    normal: tuple[int, int, int]

    def edges(self) -> tuple[tuple[Point, Point], ...]:
        """The four edges, each as a sorted endpoint pair."""
        c = self.corners
        return tuple(
            (a, b) if a <= b else (b, a)
            for a, b in ((c[0], c[1]), (c[1], c[2]), (c[2], c[3]), (c[3], c[0]))
        )


# Corner layouts per face direction, as offsets from the cell's min corner.
# Winding is counterclockwise seen from outside (cross of consecutive edge
# vectors equals the outward normal).
_FACE_CORNERS = {
    (1, 0, 0): ((1, 0, 0), (1, 1, 0), (1, 1, 1), (1, 0, 1)),
    (-1, 0, 0): ((0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 0)),
    (0, 1, 0): ((0, 1, 0), (0, 1, 1), (1, 1, 1), (1, 1, 0)),
    (0, -1, 0): ((0, 0, 0), (1, 0, 0), (1, 0, 1), (0, 0, 1)),
    (0, 0, 1): ((0, 0, 1), (1, 0, 1), (1, 1, 1), (0, 1, 1)),
    (0, 0, -1): ((0, 0, 0), (0, 1, 0), (1, 1, 0), (1, 0, 0)),
}

_DIRECTIONS = tuple(_FACE_CORNERS)


@dataclass(frozen=True)
class SurfaceComplex:
    """Quad-faced boundary complex with vertex and edge incidence.

    vertices and edges map each lattice element to the (sorted) ids of the
    faces it belongs to. cells is the solid the complex bounds; vertex
    neighborhoods are classified against it.
    """

    faces: tuple[Face, ...]
    cells: frozenset[Cell]
    vertices: dict[Point, tuple[int, ...]] = field(compare=False)
    edges: dict[tuple[Point, Point], tuple[int, ...]] = field(compare=False)

    @property
    def v_count(self) -> int:
        return len(self.vertices)

    @property
    def e_count(self) -> int:
        return len(self.edges)

    @property
    def f_count(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.v_count - self.e_count + self.f_count


def _build_complex(faces: list[Face], cells: frozenset[Cell]) -> SurfaceComplex:
    vertices: dict[Point, list[int]] = {}
    edges: dict[tuple[Point, Point], list[int]] = {}
    for fid, face in enumerate(faces):
        for corner in face.corners:
            vertices.setdefault(corner, []).append(fid)
        for edge in face.edges():
            edges.setdefault(edge, []).append(fid)
    return SurfaceComplex(
        faces=tuple(faces),
        cells=cells,
        vertices={v: tuple(ids) for v, ids in vertices.items()},
        edges={e: tuple(ids) for e, ids in edges.items()},
    )


def extract_boundary(v: VoxelSet) -> SurfaceComplex:
    """Boundary of the cell union as a complex of oriented unit squares."""
    if not v.occupied:
        raise SurfaceError("cannot extract the boundary of an empty solid")
    grid, lo = v.grid()
    inner = grid[1:-1, 1:-1, 1:-1]
    faces: list[Face] = []
    for direction in _DIRECTIONS:
        dx, dy, dz = direction
        neighbor = grid[
            1 + dx : grid.shape[0] - 1 + dx,
            1 + dy : grid.shape[1] - 1 + dy,
            1 + dz : grid.shape[2] - 1 + dz,
        ]
        layout = _FACE_CORNERS[direction]
        # np.argwhere returns cells in lexicographic order: deterministic ids.
        for ix, iy, iz in np.argwhere(inner & ~neighbor):
            base = (int(ix) + lo[0], int(iy) + lo[1], int(iz) + lo[2])
            corners = tuple(
                (base[0] + ox, base[1] + oy, base[2] + oz) for ox, oy, oz in layout
            )
            faces.append(Face(corners, direction))
    return _build_complex(faces, v.occupied)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the closed-surface checks.

    violations holds (kind, location) pairs where kind is "NonManifoldEdge"
    (edge not on exactly two faces) or "NonManifoldVertex" (disconnected
    vertex link).
    """

    is_closed_surface: bool
    violations: tuple[tuple[str, object], ...]


def validate_closed_surface(s: SurfaceComplex) -> ValidationReport:
    """Check that every edge lies on two faces and every vertex link connects."""
    violations: list[tuple[str, object]] = []
    for edge, fids in s.edges.items():
        if len(fids) != 2:
            violations.append(("NonManifoldEdge", edge))
    for vertex, fids in s.vertices.items():
        if len(fids) <= 1:
            violations.append(("NonManifoldVertex", vertex))
            continue
        # Faces around a good vertex form one cycle, glued along the edges
        # through the vertex. Walk that adjacency and see if it spans.
        by_edge: dict[tuple[Point, Point], list[int]] = {}
        for fid in fids:
            for edge in s.faces[fid].edges():
                if vertex in edge:
                    by_edge.setdefault(edge, []).append(fid)
        adjacency: dict[int, set[int]] = {fid: set() for fid in fids}
        for shared in by_edge.values():
            for a in shared:
                for b in shared:
                    if a != b:
                        adjacency[a].add(b)
        seen = {fids[0]}
        stack = [fids[0]]
        while stack:
            for nxt in adjacency[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if len(seen) != len(fids):
            violations.append(("NonManifoldVertex", vertex))
    return ValidationReport(not violations, tuple(violations))


def connected_components(s: SurfaceComplex) -> list[SurfaceComplex]:
    """Split the complex by face adjacency across shared edges."""
    n_faces = len(s.faces)
    if n_faces == 0:
        return []
    neighbors: dict[int, set[int]] = {fid: set() for fid in range(n_faces)}
    for fids in s.edges.values():
        for a in fids:
            for b in fids:
                if a != b:
                    neighbors[a].add(b)
    assigned = [-1] * n_faces
    component = 0
    for start in range(n_faces):
        if assigned[start] != -1:
            continue
        assigned[start] = component
        stack = [start]
        while stack:
            for nxt in neighbors[stack.pop()]:
                if assigned[nxt] == -1:
                    assigned[nxt] = component
                    stack.append(nxt)
        component += 1
    if component == 1:
        return [s]
    groups: list[list[Face]] = [[] for _ in range(component)]
    for fid, face in enumerate(s.faces):
        groups[assigned[fid]].append(face)
    return [_build_complex(group, s.cells) for group in groups]


# ---- fast paths used by the search ----


def euler_characteristic(v: VoxelSet) -> int:
    """V - E + F of the boundary without building the complex.

    Works on doubled coordinates: a cell center is all-odd, a face center has
    exactly one even coordinate, an edge midpoint two, a vertex three. Each
    boundary element dedups into a plain set of integer triples.
    """
    if not v.occupied:
        raise SurfaceError("empty solid")
    occupied = v.occupied
    faces: set[Point] = set()
    for (cx, cy, cz) in occupied:
        center = (2 * cx + 1, 2 * cy + 1, 2 * cz + 1)
        for dx, dy, dz in _DIRECTIONS:
            if (cx + dx, cy + dy, cz + dz) not in occupied:
                faces.add((center[0] + dx, center[1] + dy, center[2] + dz))
    edges: set[Point] = set()
    verts: set[Point] = set()
    for (fx, fy, fz) in faces:
        if fx % 2 == 0:
            tangents = ((0, 1, 0), (0, 0, 1))
        elif fy % 2 == 0:
            tangents = ((1, 0, 0), (0, 0, 1))
        else:
            tangents = ((1, 0, 0), (0, 1, 0))
        (ux, uy, uz), (wx, wy, wz) = tangents
        for sign in (1, -1):
            edges.add((fx + sign * ux, fy + sign * uy, fz + sign * uz))
            edges.add((fx + sign * wx, fy + sign * wy, fz + sign * wz))
        for su in (1, -1):
            for sw in (1, -1):
                verts.add((fx + su * ux + sw * wx, fy + su * uy + sw * wy, fz + su * uz + sw * wz))
    return len(verts) - len(edges) + len(faces)


def _component_count(occupied: frozenset[Cell]) -> int:
    remaining = set(occupied)
    count = 0
    while remaining:
        count += 1
        stack = [remaining.pop()]
        while stack:
            cx, cy, cz = stack.pop()
            for dx, dy, dz in _DIRECTIONS:
                nb = (cx + dx, cy + dy, cz + dz)
                if nb in remaining:
                    remaining.remove(nb)
                    stack.append(nb)
    return count


def solid_genus(v: VoxelSet) -> int:
    """Total genus of the boundary, summed over connected components.

    For a connected solid this is the plain genus (2 - chi) / 2; disjoint
    pieces contribute their genera additively (chi is additive and each
    closed component satisfies chi = 2 - 2g).
    """
    chi = euler_characteristic(v)
    parts = _component_count(v.occupied)
    assert chi % 2 == 0
    return parts - chi // 2
