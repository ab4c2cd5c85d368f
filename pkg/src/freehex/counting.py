"""Production counting.

The matrix route assembles the (2n+2) x (2n+2) skew matrix whose negated
Pfaffian counts tilings with the side-2 triangular gap.  The closed routes
evaluate the product-sum formulas for the hole-free region, the triangular
gap, and the horizontal-lozenge gap, exactly in rationals with integrality
asserted at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Tuple, Type, Union

from .errors import (
    DegenerateRegion,
    HoleOutOfRegion,
    NonIntegerResult,
    TooLarge,
)
from .exactnum import RationalLike, binomial, pochhammer, signed_sum
from .pfaffian import pfaffian
from .region import HorizontalLozenge, Triangle2

_CLOSED_N_LIMIT = 1024
_PFAFFIAN_N_LIMIT = 40

HALF = Fraction(1, 2)


def q_entry(i: int, j: int, n: int, x: RationalLike) -> Fraction:
    """Entry (i, j), 1-based, of the upper-left 2n x 2n block, rational x.

    Canonical evaluator; polynomial in x, antisymmetric in (i, j).
    """
    if not (1 <= i <= 2 * n and 1 <= j <= 2 * n):
        raise ValueError(f"indices must lie in 1..{2 * n}")
    if i == j:
        return Fraction(0)
    x = Fraction(x)
    top = 2 * x + 2 * n + 1
    total = Fraction(0)
    for l in range(i):
        c = comb(j - 1, i - l - 1) if i - l - 1 <= j - 1 else 0
        if c:
            total += c * comb(l + j, l) * binomial(top, l + j + 1)
    return Fraction(j - i, i) * total


def q_entry_sumform(i: int, j: int, n: int, x: int) -> Fraction:
    """Same entry through the boundary sum over t = 1 .. 2x+2n.

    Valid for integer x of either sign: out-of-order bounds go through the
    signed summation convention.  The 1/t inside the summand is removed via
    (1/t) C(t, i) = (1/i) C(t-1, i-1), which holds for every integer t.
    """
    if not (1 <= i <= 2 * n and 1 <= j <= 2 * n):
        raise ValueError(f"indices must lie in 1..{2 * n}")
    if i == j:
        return Fraction(0)

    def term(t: int) -> Fraction:
        return binomial(t - 1, i - 1) * binomial(t, j)

    return Fraction(j - i, i) * signed_sum(1, 2 * x + 2 * n + 1, term)


def h_entry(i: int, col: int, n: int, k: int, x: RationalLike) -> Fraction:
    """Entry (i, col) of the 2n x 2 right block, col in {1, 2}."""
    if col not in (1, 2):
        raise ValueError("col must be 1 or 2")
    shift = i - 2 * k - 1 if col == 1 else i - 2 * k - 2
    return binomial(Fraction(x) + n - k - 1, shift)


@dataclass(frozen=True)
class GapMatrix:
    n: int
    k: int
    x: Fraction
    body: Tuple[Tuple[Fraction, ...], ...]


def build_matrix(n: int, k: int, x: RationalLike) -> GapMatrix:
    """Assemble the (2n+2) x (2n+2) skew matrix for gap position k."""
    if n < 1:
        raise DegenerateRegion(f"need n >= 1, got {n}")
    if not 0 <= k <= n - 1:
        raise HoleOutOfRegion(f"gap position {k} outside 0..{n - 1}")
    x = Fraction(x)
    size = 2 * n + 2
    body = [[Fraction(0)] * size for _ in range(size)]
    for i in range(1, 2 * n + 1):
        for j in range(i + 1, 2 * n + 1):
            v = q_entry(i, j, n, x)
            body[i - 1][j - 1] = v
            body[j - 1][i - 1] = -v
    for i in range(1, 2 * n + 1):
        for col in (1, 2):
            v = h_entry(i, col, n, k, x)
            body[i - 1][2 * n + col - 1] = v
            body[2 * n + col - 1][i - 1] = -v
    return GapMatrix(n, k, x, tuple(tuple(row) for row in body))


def count_gap_pfaffian(n: int, k: int, x: int) -> int:
    """Tiling count with the triangular gap, as minus the matrix Pfaffian."""
    if x < 1:
        raise DegenerateRegion(f"matrix counting route needs x >= 1, got {x}")
    if n > _PFAFFIAN_N_LIMIT:
        raise TooLarge(f"matrix route guarded to n <= {_PFAFFIAN_N_LIMIT}")
    value = -pfaffian(build_matrix(n, k, x).body)
    if value.denominator != 1 or value < 0:
        raise NonIntegerResult(f"Pfaffian route produced {value}")
    return int(value)


def count_free_pfaffian(n: int, x: int) -> int:
    """Hole-free tiling count through the matrix route.

    Uses the embedding trick: the gap formula at size n+1, gap position n,
    width x-1 counts exactly the hole-free tilings at size n, width x (the
    extra ring of the larger region is forced).
    """
    if x < 1:
        raise DegenerateRegion(f"matrix counting route needs x >= 1, got {x}")
    if n + 1 > _PFAFFIAN_N_LIMIT:
        raise TooLarge(f"matrix route guarded to n <= {_PFAFFIAN_N_LIMIT - 1}")
    value = -pfaffian(build_matrix(n + 1, n, x - 1).body)
    if value.denominator != 1 or value < 0:
        raise NonIntegerResult(f"Pfaffian route produced {value}")
    return int(value)


def _balanced_product(factors: List[int]) -> int:
    # Pairwise tree product: keeps operands comparable in size, which is
    # what CPython's subquadratic multiplication needs to pay off.
    if not factors:
        return 1
    values = factors
    while len(values) > 1:
        nxt = [values[i] * values[i + 1] for i in range(0, len(values) - 1, 2)]
        if len(values) % 2:
            nxt.append(values[-1])
        values = nxt
    return values[0]


def _boundary_product(n: int, x: int) -> Fraction:
    # prod_{s=1}^{n} (2x+2s)_{4n-4s+1} / (2s)_{4n-4s+1}, integer x >= 0
    num: List[int] = []
    den: List[int] = []
    for s in range(1, n + 1):
        length = 4 * n - 4 * s + 1
        num.extend(2 * x + 2 * s + t for t in range(length))
        den.extend(2 * s + t for t in range(length))
    return Fraction(_balanced_product(num), _balanced_product(den))


def _half_shift_ratio(n: int, x: int) -> Fraction:
    # (x + 1/2)_{2n} / (1/2)_{2n} = prod_{i=0}^{2n-1} (2x+1+2i)/(1+2i)
    num = [2 * x + 1 + 2 * i for i in range(2 * n)]
    den = [1 + 2 * i for i in range(2 * n)]
    return Fraction(_balanced_product(num), _balanced_product(den))


def _check_closed(n: int, k: int, x: int) -> None:
    if n < 1:
        raise DegenerateRegion(f"need n >= 1, got {n}")
    if not 0 <= k <= n - 1:
        raise HoleOutOfRegion(f"gap position {k} outside 0..{n - 1}")
    if x < 0:
        raise DegenerateRegion(f"closed formulas need x >= 0, got {x}")
    if n > _CLOSED_N_LIMIT:
        raise TooLarge(f"closed formulas guarded to n <= {_CLOSED_N_LIMIT}")


def macmahon(n: int, x: int) -> int:
    """Hole-free tiling count: the symmetric-plane-partition product formula."""
    if n < 1:
        raise DegenerateRegion(f"need n >= 1, got {n}")
    if x < 0:
        raise DegenerateRegion(f"need x >= 0, got {x}")
    if n > _CLOSED_N_LIMIT:
        raise TooLarge(f"closed formulas guarded to n <= {_CLOSED_N_LIMIT}")
    value = _half_shift_ratio(n, x) * _boundary_product(n, x)
    if value.denominator != 1:
        raise NonIntegerResult(f"product formula produced {value}")
    return int(value)


def _gap_sum(n: int, k: int, x: Fraction) -> Fraction:
    # The terminating sum shared by the triangular-gap formula and the
    # finite correlation ratio.
    total = Fraction(0)
    for i in range(n - k):
        weight = pochhammer(HALF, i) / (
            factorial(i)
            * factorial(n - k - i - 1) ** 2
            * pochhammer(n + k - i + 1, n - k)
            * pochhammer(n + k - i + 1, i)
            * pochhammer(2 * n - i + HALF, i)
        )
        bracket = pochhammer(x, i) * pochhammer(x + i + 1, n - k - i - 1) * pochhammer(
            x + n + k + 1, n - k
        ) - pochhammer(x, n - k) * pochhammer(x + n + k + 1, n - k - i - 1) * pochhammer(
            x + 2 * n - i + 1, i
        )
        total += weight * bracket
    return total


def _lozenge_sum(n: int, k: int, x: Fraction) -> Fraction:
    # Same sum with the extra reciprocal-binomial-square weight.
    total = Fraction(0)
    for i in range(n - k):
        weight = pochhammer(HALF, i) / (
            factorial(i)
            * factorial(n - k - i - 1) ** 2
            * pochhammer(n + k - i + 1, n - k)
            * pochhammer(n + k - i + 1, i)
            * pochhammer(2 * n - i + HALF, i)
        )
        weight /= Fraction(comb(n + k - i, 2 * k + 1)) ** 2
        bracket = pochhammer(x, i) * pochhammer(x + i + 1, n - k - i - 1) * pochhammer(
            x + n + k + 1, n - k
        ) - pochhammer(x, n - k) * pochhammer(x + n + k + 1, n - k - i - 1) * pochhammer(
            x + 2 * n - i + 1, i
        )
        total += weight * bracket
    return total


def _gap_prefactor(n: int, k: int, x: Fraction) -> Fraction:
    return Fraction(comb(4 * k + 1, 2 * k) * factorial(n + k)) / pochhammer(
        x + n - k, 2 * k + 1
    )


def _lozenge_prefactor(n: int, k: int, x: Fraction) -> Fraction:
    return (
        Fraction(comb(n + k, 2 * k + 1) ** 2 * factorial(n - k - 1))
        * pochhammer(x + n - k, 2 * k + 1)
        / pochhammer(Fraction(n - k), 2 * k + 1)
    )


def count_gap_closed(n: int, k: int, x: int) -> int:
    """Tiling count with the side-2 triangular gap, by the closed formula."""
    _check_closed(n, k, x)
    xf = Fraction(x)
    value = _gap_prefactor(n, k, xf) * _boundary_product(n, x) * _gap_sum(n, k, xf)
    if value.denominator != 1 or value < 0:
        raise NonIntegerResult(f"closed formula produced {value}")
    return int(value)


def count_lozenge_closed(n: int, k: int, x: int) -> int:
    """Tiling count with the horizontal-lozenge gap, by the closed formula."""
    _check_closed(n, k, x)
    xf = Fraction(x)
    value = (
        _lozenge_prefactor(n, k, xf) * _boundary_product(n, x) * _lozenge_sum(n, k, xf)
    )
    if value.denominator != 1 or value < 0:
        raise NonIntegerResult(f"closed formula produced {value}")
    return int(value)


_HoleArg = Union[None, Triangle2, HorizontalLozenge, Type[Triangle2], Type[HorizontalLozenge]]


def _hole_kind(hole: _HoleArg, k: int) -> str:
    if hole is None:
        return "none"
    if hole is Triangle2 or isinstance(hole, Triangle2):
        kind = "triangle"
    elif hole is HorizontalLozenge or isinstance(hole, HorizontalLozenge):
        kind = "lozenge"
    else:
        raise TypeError(f"unknown hole spec {hole!r}")
    if not isinstance(hole, type) and hole.k != k:
        raise ValueError(f"hole position {hole.k} conflicts with k = {k}")
    return kind


def finite_ratio(n: int, k: int, x: int, hole: _HoleArg) -> Fraction:
    """Exact ratio of tiling counts with and without the gap.

    Mathematically equal to the quotient of the closed counts, but computed
    with the common boundary product cancelled, which keeps n in the
    hundreds cheap.  ``hole`` may be a hole class, a hole instance whose
    position matches k, or None (ratio 1).
    """
    kind = _hole_kind(hole, k)
    if kind == "none":
        return Fraction(1)
    _check_closed(n, k, x)
    xf = Fraction(x)
    base = _half_shift_ratio(n, x)
    if kind == "triangle":
        return _gap_prefactor(n, k, xf) * _gap_sum(n, k, xf) / base
    return _lozenge_prefactor(n, k, xf) * _lozenge_sum(n, k, xf) / base
