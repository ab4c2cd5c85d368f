"""Brute-force ground truth.

Two independent oracles: direct enumeration of tilings as matchings of the
cell graph (free cells may stay uncovered), and enumeration of families of
vertex-disjoint lattice paths with the endpoint data from
``region.nilp_endpoints``.  Both are exponential and guarded; everything
faster must agree with them.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Dict, List, Tuple

from .errors import TooLarge
from .region import RegionGraph, nilp_endpoints

_CELL_LIMIT = 120
_NILP_N_LIMIT = 3
_NILP_X_LIMIT = 4


def count_matchings(g: RegionGraph) -> int:
    """Number of matchings covering every non-free cell, free cells optional.

    Branches on the lowest-indexed uncovered non-free cell (cells ordered by
    column, row, orientation), so the subtree below a search node depends
    only on the covered set; counts are memoized on that set as a bitmask.
    """
    cells = g.cells_sorted
    if len(cells) > _CELL_LIMIT:
        raise TooLarge(f"matching oracle guarded to {_CELL_LIMIT} cells, got {len(cells)}")
    index = {c: i for i, c in enumerate(cells)}
    adj = [0] * len(cells)
    for cell, ns in g.adjacency.items():
        m = 0
        for other in ns:
            m |= 1 << index[other]
        adj[index[cell]] = m
    nonfree = 0
    for cell in cells:
        if cell not in g.free_cells:
            nonfree |= 1 << index[cell]

    memo: Dict[int, int] = {}

    def rec(cov: int) -> int:
        todo = nonfree & ~cov
        if not todo:
            # Only free cells remain; they carry no mutual edges, so each
            # stays uncovered in exactly one way.
            return 1
        cached = memo.get(cov)
        if cached is not None:
            return cached
        low = todo & -todo
        i = low.bit_length() - 1
        total = 0
        avail = adj[i] & ~cov
        covered_here = cov | low
        while avail:
            nb = avail & -avail
            total += rec(covered_here | nb)
            avail ^= nb
        memo[cov] = total
        return total

    return rec(0)


def count_nilp(n: int, x: int, k: int) -> int:
    """Number of valid lattice-path families for the triangular gap.

    Paths make unit steps right or up.  Path i starts at (-i, i); endpoints
    are the free column x = -1 (heights 1..2x+2n) plus the two forced
    points S1, S2, and a family must be vertex-disjoint with S1 and S2 both
    used as endpoints.  A path may run through free-column points before
    stopping, but never through S1 or S2: a family in which a forced point
    is an interior vertex can never also use it as an endpoint.
    """
    starts, free_targets, (s1, s2) = nilp_endpoints(n, x, k)
    if n > _NILP_N_LIMIT or x > _NILP_X_LIMIT:
        raise TooLarge(
            f"path oracle guarded to n <= {_NILP_N_LIMIT}, x <= {_NILP_X_LIMIT}"
        )
    height = len(free_targets)  # = 2x + 2n, the top usable height

    def vid(vx: int, vy: int) -> int:
        return (vx + 2 * n) * height + (vy - 1)

    # Candidate paths per start, as occupied-vertex bitmasks.  cand_free is
    # sorted by endpoint height so a height threshold maps to a slice.
    cand_free: List[Tuple[List[int], List[int]]] = []  # (end heights, masks)
    cand_s1: List[List[int]] = []
    cand_s2: List[List[int]] = []
    for sx, sy in starts:
        ends: List[Tuple[int, int]] = []
        m1: List[int] = []
        m2: List[int] = []

        def walk(vx: int, vy: int, mask: int) -> None:
            mask |= 1 << vid(vx, vy)
            if (vx, vy) == s1:
                m1.append(mask)
                return
            if (vx, vy) == s2:
                m2.append(mask)
                return
            if vx == -1:
                ends.append((vy, mask))
                if vy + 1 <= height:
                    walk(vx, vy + 1, mask)
                return
            walk(vx + 1, vy, mask)
            if vy + 1 <= height:
                walk(vx, vy + 1, mask)

        walk(sx, sy, 0)
        ends.sort(key=lambda e: e[0])
        cand_free.append(([e[0] for e in ends], [e[1] for e in ends]))
        cand_s1.append(m1)
        cand_s2.append(m2)

    p = len(starts)

    def fill(rest: List[int], pos: int, occupied: int, min_height: int) -> int:
        # Free-column endpoints must increase with the start index, else the
        # two paths would share a vertex; prune accordingly.
        if pos == len(rest):
            return 1
        if height - min_height < len(rest) - pos:
            return 0
        heights, masks = cand_free[rest[pos]]
        lo = bisect_right(heights, min_height)
        if pos == len(rest) - 1:
            count = 0
            for idx in range(lo, len(masks)):
                if not masks[idx] & occupied:
                    count += 1
            return count
        total = 0
        for idx in range(lo, len(masks)):
            m = masks[idx]
            if not m & occupied:
                total += fill(rest, pos + 1, occupied | m, heights[idx])
        return total

    total = 0
    for ia in range(p):
        if not cand_s1[ia]:
            continue
        # The path into S2 starts strictly above-left of the path into S1;
        # the other assignment always forces a shared vertex.
        for ib in range(ia + 1, p):
            if not cand_s2[ib]:
                continue
            rest = [j for j in range(p) if j != ia and j != ib]
            for mask1 in cand_s1[ia]:
                for mask2 in cand_s2[ib]:
                    if mask1 & mask2:
                        continue
                    total += fill(rest, 0, mask1 | mask2, 0)
    return total
