from fractions import Fraction

import pytest

from freehex.counting import (
    build_matrix,
    count_free_pfaffian,
    count_gap_closed,
    count_gap_pfaffian,
    count_lozenge_closed,
    finite_ratio,
    h_entry,
    macmahon,
    q_entry,
    q_entry_sumform,
)
from freehex.errors import DegenerateRegion, HoleOutOfRegion, TooLarge
from freehex.pfaffian import pfaffian

# Pinned values.  The triangle/lozenge grids were cross-checked against the
# exhaustive matching enumerator before being frozen here; the free-boundary
# grid additionally agrees with the product formula.

TRIANGLE = {
    (1, 1, 0): 1,
    (2, 1, 0): 26,
    (2, 1, 1): 35,
    (2, 2, 0): 222,
    (2, 2, 1): 84,
    (2, 3, 0): 1122,
    (2, 3, 1): 165,
    (3, 1, 0): 491,
    (3, 1, 1): 1284,
    (3, 1, 2): 2772,
    (3, 2, 0): 40469,
    (3, 2, 1): 40326,
    (3, 2, 2): 28314,
    (3, 3, 0): 1316172,
    (3, 3, 1): 609752,
    (3, 3, 2): 184041,
}

LOZENGE = {
    (1, 1, 0): 4,
    (1, 2, 0): 9,
    (1, 3, 0): 16,
    (2, 1, 0): 66,
    (2, 1, 1): 56,
    (2, 2, 0): 1032,
    (2, 2, 1): 840,
    (2, 3, 0): 8250,
    (2, 3, 1): 6600,
    (3, 1, 0): 1016,
    (3, 1, 1): 960,
    (3, 1, 2): 792,
    (3, 2, 0): 136565,
    (3, 2, 1): 126555,
    (3, 2, 2): 99099,
    (3, 3, 0): 6521372,
    (3, 3, 1): 5985980,
    (3, 3, 2): 4580576,
}

FREE = {(1, 1): 10, (1, 3): 84, (2, 3): 28314, (3, 2): 306735, (3, 3): 18076916}


def test_matrix_anchor():
    m = build_matrix(1, 0, 1)
    body = m.body
    assert len(body) == 4
    assert body[0][1] == 10
    assert body[0][2] == 1 and body[0][3] == 0
    assert body[1][2] == 1 and body[1][3] == 1
    assert body[2][3] == 0
    for i in range(4):
        assert body[i][i] == 0
        for j in range(4):
            assert body[i][j] == -body[j][i]
    assert pfaffian(body) == -1


def test_q_entry():
    assert q_entry(1, 2, 1, 1) == 10
    assert q_entry(2, 2, 1, 1) == 0
    with pytest.raises(ValueError):
        q_entry(0, 1, 1, 1)
    with pytest.raises(ValueError):
        q_entry(1, 3, 1, 1)


def test_q_entry_sumform_agrees():
    for n in (2, 3):
        for x in range(-2, 3):
            for i in range(1, 2 * n + 1):
                for j in range(i + 1, 2 * n + 1):
                    assert q_entry(i, j, n, x) == q_entry_sumform(i, j, n, x)


def test_h_entry():
    assert h_entry(1, 2, 1, 0, 1) == 0
    assert h_entry(2, 1, 1, 0, 1) == 1
    assert h_entry(2, 2, 1, 0, 1) == 1


def test_triangle_closed_grid():
    for (n, x, k), want in TRIANGLE.items():
        assert count_gap_closed(n, k, x) == want


def test_lozenge_closed_grid():
    for (n, x, k), want in LOZENGE.items():
        assert count_lozenge_closed(n, k, x) == want


def test_pfaffian_route_agrees():
    for (n, x, k), want in TRIANGLE.items():
        assert count_gap_pfaffian(n, k, x) == want


def test_pfaffian_route_at_zero_x():
    # the matrix stays nonsingular at x = 0 even though the closed form
    # needs the guard-free product route there
    for n in (1, 2):
        for k in range(n):
            direct = -pfaffian(build_matrix(n, k, 0).body)
            assert direct == count_gap_closed(n, k, 0)


def test_macmahon():
    for (n, x), want in FREE.items():
        assert macmahon(n, x) == want
    for n in range(1, 7):
        assert macmahon(n, 0) == 1


def test_free_pfaffian_embedding():
    for n in (1, 2, 3):
        for x in (1, 2, 3):
            assert count_free_pfaffian(n, x) == macmahon(n, x)


def test_widest_gap_specialization():
    # removing the widest triangular gap leaves a smaller free region
    for n in (1, 2, 3, 4, 5, 6):
        for x in (1, 2, 3, 4, 5, 6):
            assert count_gap_closed(n + 1, n, x - 1) == macmahon(n, x)


def test_finite_ratio():
    from freehex.region import HorizontalLozenge, Triangle2

    assert finite_ratio(1, 0, 1, Triangle2) == Fraction(1, 10)
    assert finite_ratio(2, 1, 2, None) == 1
    assert finite_ratio(2, 0, 1, Triangle2(0)) == finite_ratio(2, 0, 1, Triangle2)
    assert finite_ratio(2, 0, 1, HorizontalLozenge) == Fraction(
        LOZENGE[(2, 1, 0)], macmahon(2, 1)
    )
    with pytest.raises(ValueError):
        finite_ratio(2, 0, 1, Triangle2(1))


def test_ratio_matches_count_quotient():
    from freehex.region import Triangle2

    for (n, x, k), want in TRIANGLE.items():
        assert finite_ratio(n, k, x, Triangle2) == Fraction(want, macmahon(n, x))


def test_errors():
    with pytest.raises(DegenerateRegion):
        count_gap_closed(0, 0, 1)
    with pytest.raises(DegenerateRegion):
        count_gap_closed(1, 0, -1)
    with pytest.raises(DegenerateRegion):
        count_gap_pfaffian(1, 0, 0)
    with pytest.raises(HoleOutOfRegion):
        count_gap_closed(2, 2, 1)
    with pytest.raises(HoleOutOfRegion):
        count_lozenge_closed(2, -1, 1)
    with pytest.raises(TooLarge):
        count_gap_pfaffian(41, 0, 1)
    with pytest.raises(TooLarge):
        count_gap_closed(1025, 0, 1)
