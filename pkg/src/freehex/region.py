"""Geometry of the half-hexagon region, its free boundary, and the gaps.

The region F(n, x) is the left half of a hexagon with side lengths
2n, 2n, 2x, 2n, 2n, 2x, cut along its vertical symmetry axis.  Concretely it
is the pentagon with bottom vertex (0, -(x+n)), an up-left side of 2n unit
steps (-sqrt3/2, +1/2) to (-n sqrt3, -x), a vertical west side to
(-n sqrt3, x), an up-right side of 2n unit steps to (0, x+n), closed along
the y-axis.  The y-axis is the free boundary: lozenges may protrude halfway
across it, which at the cell level means the left-pointing unit triangles
leaning on it may stay uncovered.

Cell addressing.  Vertical lattice lines sit at horizontal positions
-c*sqrt3/2 for c = 0, 1, 2, ...; column c is the strip between lines c and
c+1.  A left-pointing cell (apex to the left) in column c has its vertical
edge on line c; a right-pointing cell has it on line c+1.  Rows are indexed
so that geometry stays integral: internally a cell is handled through the
doubled height y2 of the lower end of its vertical edge, and the public row
index is r = (y2 - parity) // 2 with parity = c % 2 for left-pointing cells
and (c+1) % 2 for right-pointing ones.

The triangular gap of side 2 at position k (its vertical side running from
(-k sqrt3, -1) to (-k sqrt3, 1)) consists of three left-pointing cells and
one right-pointing cell in columns 2k and 2k+1.  The horizontal-lozenge gap
at position k is the pair formed by the leftmost of those left-pointing
cells and the right-pointing cell sharing its vertical edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from .errors import DegenerateRegion, HoleOutOfRegion


@dataclass(frozen=True)
class Triangle2:
    """Side-2 left-pointing triangular gap at horizontal distance k."""

    k: int


@dataclass(frozen=True)
class HorizontalLozenge:
    """Horizontal-lozenge gap contained in the side-2 triangle at distance k."""

    k: int


HoleSpec = Optional[Union[Triangle2, HorizontalLozenge]]


@dataclass(frozen=True)
class RegionSpec:
    n: int
    x: int
    hole: HoleSpec = None


@dataclass(frozen=True, order=True)
class TriangleCell:
    column: int
    row: int
    orientation: str  # "L" (apex left) or "R" (apex right)

    def _y2(self) -> int:
        parity = self.column % 2 if self.orientation == "L" else (self.column + 1) % 2
        return 2 * self.row + parity


def _cell(orientation: str, column: int, y2: int) -> TriangleCell:
    parity = column % 2 if orientation == "L" else (column + 1) % 2
    assert (y2 - parity) % 2 == 0
    return TriangleCell(column, (y2 - parity) // 2, orientation)


class RegionGraph:
    """Immutable cell graph of a built region.

    Attributes: ``spec``, ``cells`` (frozenset of TriangleCell), ``free_cells``
    (subset allowed to stay uncovered), ``adjacency`` (cell -> tuple of
    edge-sharing cells, sorted).  ``cells_sorted`` gives the deterministic
    cell order used by the enumeration oracle.
    """

    def __init__(
        self,
        spec: RegionSpec,
        cells: FrozenSet[TriangleCell],
        free_cells: FrozenSet[TriangleCell],
        adjacency: Dict[TriangleCell, Tuple[TriangleCell, ...]],
    ):
        self.spec = spec
        self.cells = cells
        self.free_cells = free_cells
        self.adjacency = adjacency
        self.cells_sorted: Tuple[TriangleCell, ...] = tuple(sorted(cells))

    def count_oriented(self, orientation: str) -> int:
        return sum(1 for c in self.cells if c.orientation == orientation)

    def to_text(self) -> str:
        """One cell per line: "column row orientation [free]"."""
        lines = []
        for c in self.cells_sorted:
            mark = " free" if c in self.free_cells else ""
            lines.append(f"{c.column} {c.row} {c.orientation}{mark}")
        return "\n".join(lines)

    def __repr__(self) -> str:  # short, for debugging
        s = self.spec
        return f"RegionGraph(n={s.n}, x={s.x}, hole={s.hole!r}, cells={len(self.cells)})"


def _hole_cells(hole: HoleSpec) -> List[TriangleCell]:
    if hole is None:
        return []
    k = hole.k
    if isinstance(hole, Triangle2):
        return [
            _cell("L", 2 * k, -2),
            _cell("L", 2 * k, 0),
            _cell("R", 2 * k, -1),
            _cell("L", 2 * k + 1, -1),
        ]
    if isinstance(hole, HorizontalLozenge):
        return [
            _cell("L", 2 * k + 1, -1),
            _cell("R", 2 * k, -1),
        ]
    raise TypeError(f"unknown hole spec {hole!r}")


def build_region(spec: RegionSpec) -> RegionGraph:
    """Construct the cell graph for a region spec.

    Raises DegenerateRegion for n < 1 or x < 1 and HoleOutOfRegion when the
    hole position is outside 0 <= k <= n-1.
    """
    n, x = spec.n, spec.x
    if n < 1 or x < 1:
        raise DegenerateRegion(f"need n >= 1 and x >= 1, got n={n}, x={x}")
    if spec.hole is not None and not 0 <= spec.hole.k <= n - 1:
        raise HoleOutOfRegion(f"hole position {spec.hole.k} outside 0..{n - 1}")

    h = x + n  # half-height of the region on the free boundary
    cells = set()
    for c in range(2 * n):
        # Left-pointing: vertical edge on line c spans [y2, y2+2].
        for y2 in range(c - 2 * h, 2 * h - c - 2 + 1, 2):
            cells.add(_cell("L", c, y2))
        # Right-pointing: vertical edge on line c+1, one step shorter span.
        for y2 in range(c + 1 - 2 * h, 2 * h - c - 3 + 1, 2):
            cells.add(_cell("R", c, y2))

    removed = _hole_cells(spec.hole)
    for cell in removed:
        if cell not in cells:
            raise HoleOutOfRegion(f"hole cell {cell} not inside the region")
        cells.remove(cell)

    free = frozenset(c for c in cells if c.orientation == "L" and c.column == 0)

    cellset = frozenset(cells)
    neighbors: Dict[TriangleCell, List[TriangleCell]] = {c: [] for c in cellset}
    for cell in cellset:
        if cell.orientation != "L":
            continue
        c, y2 = cell.column, cell._y2()
        # An L cell shares its vertical edge with the R cell of column c-1
        # at the same height, and its oblique edges with the R cells of its
        # own column one half-step below and above.
        for rc, ry2 in ((c - 1, y2), (c, y2 - 1), (c, y2 + 1)):
            if rc < 0:
                continue
            other = _cell("R", rc, ry2)
            if other in cellset:
                neighbors[cell].append(other)
                neighbors[other].append(cell)
    adjacency = {c: tuple(sorted(ns)) for c, ns in neighbors.items()}

    return RegionGraph(spec, cellset, free, adjacency)


Point = Tuple[int, int]


def nilp_endpoints(
    n: int, x: int, k: int
) -> Tuple[List[Point], List[Point], Tuple[Point, Point]]:
    """Endpoint data of the lattice-path model for the triangular gap.

    Tilings of F(n, x) minus the side-2 triangle at position k biject with
    families of 2n vertex-disjoint up/right lattice paths.  Path i starts at
    A_i = (-i, i); every path ends either on the free column
    I = {(-1, s) : 1 <= s <= 2x+2n} or at one of the two forced endpoints
    S1 = (-2k-1, x+n+k), S2 = (-2k-2, x+n+k+1), and both forced endpoints
    must be used.  Returns (starts, free_targets, (S1, S2)).
    """
    if n < 1 or x < 1:
        raise DegenerateRegion(f"need n >= 1 and x >= 1, got n={n}, x={x}")
    if not 0 <= k <= n - 1:
        raise HoleOutOfRegion(f"hole position {k} outside 0..{n - 1}")
    starts = [(-i, i) for i in range(1, 2 * n + 1)]
    free_targets = [(-1, s) for s in range(1, 2 * x + 2 * n + 1)]
    s1 = (-2 * k - 1, x + n + k)
    s2 = (-2 * k - 2, x + n + k + 1)
    return starts, free_targets, (s1, s2)
