import pytest

from freehex.errors import DegenerateRegion, HoleOutOfRegion
from freehex.region import (
    HorizontalLozenge,
    RegionSpec,
    Triangle2,
    TriangleCell,
    build_region,
    nilp_endpoints,
)


def test_smallest_region_shape():
    g = build_region(RegionSpec(1, 1))
    assert g.count_oriented("L") == 7
    assert g.count_oriented("R") == 5
    assert len(g.free_cells) == 4
    # free cells are exactly the column-0 left-pointing cells
    assert all(c.column == 0 and c.orientation == "L" for c in g.free_cells)


def test_cell_balance_and_free_count():
    for n in (1, 2, 3):
        for x in (1, 2):
            g = build_region(RegionSpec(n, x))
            assert g.count_oriented("L") - g.count_oriented("R") == 2 * n
            assert len(g.free_cells) == 2 * x + 2 * n


def test_triangle_hole_removes_four_cells():
    g0 = build_region(RegionSpec(1, 1))
    g1 = build_region(RegionSpec(1, 1, Triangle2(0)))
    assert g1.count_oriented("L") == 4
    assert g1.count_oriented("R") == 4
    assert len(g0.cells) - len(g1.cells) == 4


def test_lozenge_hole_removes_two_cells():
    g0 = build_region(RegionSpec(2, 1))
    g1 = build_region(RegionSpec(2, 1, HorizontalLozenge(0)))
    assert len(g0.cells) - len(g1.cells) == 2


def test_adjacency_symmetric_and_internal():
    g = build_region(RegionSpec(2, 2, Triangle2(1)))
    for c, ns in g.adjacency.items():
        assert c in g.cells
        for nb in ns:
            assert nb in g.cells
            assert c in g.adjacency[nb]
            # edge-sharing cells have opposite orientation
            assert nb.orientation != c.orientation


def test_hole_cells_absent():
    g = build_region(RegionSpec(2, 1, Triangle2(1)))
    assert TriangleCell(2, -1, "L") not in g.cells
    forbidden = build_region(RegionSpec(2, 1)).cells - g.cells
    assert len(forbidden) == 4
    assert all(c.column in (2, 3) for c in forbidden)


def test_validation():
    with pytest.raises(DegenerateRegion):
        build_region(RegionSpec(0, 1))
    with pytest.raises(DegenerateRegion):
        build_region(RegionSpec(1, 0))
    with pytest.raises(HoleOutOfRegion):
        build_region(RegionSpec(1, 1, Triangle2(1)))
    with pytest.raises(HoleOutOfRegion):
        build_region(RegionSpec(2, 2, HorizontalLozenge(-1)))


def test_to_text_round_trip():
    g = build_region(RegionSpec(1, 1))
    lines = g.to_text().splitlines()
    assert len(lines) == len(g.cells)
    assert sum(1 for ln in lines if ln.endswith("free")) == 4
    col, row, orient = lines[0].split()[:3]
    assert TriangleCell(int(col), int(row), orient) in g.cells


def test_nilp_endpoints_small():
    starts, targets, (s1, s2) = nilp_endpoints(1, 1, 0)
    assert starts == [(-1, 1), (-2, 2)]
    assert targets == [(-1, s) for s in range(1, 5)]
    assert (s1, s2) == ((-1, 2), (-2, 3))


def test_nilp_endpoints_shifted():
    starts, targets, (s1, s2) = nilp_endpoints(2, 2, 1)
    assert len(starts) == 4
    assert len(targets) == 8
    assert (s1, s2) == ((-3, 5), (-4, 6))
    with pytest.raises(HoleOutOfRegion):
        nilp_endpoints(2, 2, 2)
