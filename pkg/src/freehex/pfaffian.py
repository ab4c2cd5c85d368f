"""Exact skew-symmetric linear algebra.

A matrix is a square list of lists of ints or Fractions.  Entries of a skew
matrix satisfy A[i][j] == -A[j][i] with zero diagonal; callers are expected
to build such matrices, the functions here do not re-verify the symmetry.

Two Pfaffian routes are provided: the definitional sum over perfect
matchings with crossing signs (small sizes only, the ground truth) and
Gaussian elimination adapted to skew matrices (the production route, sign
tracked through pivot swaps).  Their agreement is part of the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from .errors import OddSize, SingularParameter, SizeTooLarge
from .exactnum import RationalLike, factorial, pochhammer

Matrix = Sequence[Sequence[RationalLike]]

_PF_DEFINITION_LIMIT = 12


def _copy(a: Matrix) -> List[List[Fraction]]:
    n = len(a)
    rows = [[Fraction(v) for v in row] for row in a]
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix must be square")
    return rows


def _matchings(rest: Tuple[int, ...]) -> Iterator[Tuple[Tuple[int, int], ...]]:
    # Perfect matchings of an ordered index tuple; the first element is
    # always paired, so each matching is produced exactly once.
    if not rest:
        yield ()
        return
    first = rest[0]
    for pos in range(1, len(rest)):
        partner = rest[pos]
        remaining = rest[1:pos] + rest[pos + 1 :]
        for tail in _matchings(remaining):
            yield ((first, partner),) + tail


def _crossings(pairs: Tuple[Tuple[int, int], ...]) -> int:
    # Pairs (a,b), (c,d) with a<b and c<d cross iff exactly one of c, d
    # lies strictly between a and b.
    count = 0
    for p in range(len(pairs)):
        a, b = pairs[p]
        for q in range(p + 1, len(pairs)):
            c, d = pairs[q]
            if a < c < b < d or c < a < d < b:
                count += 1
    return count


def pf_by_definition(a: Matrix) -> Fraction:
    """Pfaffian as the signed sum over perfect matchings.

    The sign of a matching is (-1) to the number of crossing pairs.  Guarded
    to sizes <= 12 (10395 matchings at size 12); use ``pfaffian`` beyond.
    """
    n = len(a)
    if n % 2:
        raise OddSize(f"Pfaffian undefined for odd size {n}")
    if n > _PF_DEFINITION_LIMIT:
        raise SizeTooLarge(f"definitional Pfaffian guarded to size {_PF_DEFINITION_LIMIT}, got {n}")
    rows = _copy(a)
    total = Fraction(0)
    for pairs in _matchings(tuple(range(n))):
        prod = Fraction(1)
        for i, j in pairs:
            prod *= rows[i][j]
            if not prod:
                break
        else:
            if _crossings(pairs) % 2:
                prod = -prod
            total += prod
    return total


def pfaffian(a: Matrix) -> Fraction:
    """Pfaffian by skew Gaussian elimination with pivoting.

    Processes index pairs (0,1), (2,3), ...; a zero pivot position is fixed
    by swapping a later row and column into place, each swap flipping the
    sign.  A column with no usable pivot means the matrix is singular and
    the Pfaffian is 0.
    """
    n = len(a)
    if n % 2:
        raise OddSize(f"Pfaffian undefined for odd size {n}")
    m = _copy(a)
    sign = 1
    result = Fraction(1)
    for j in range(0, n, 2):
        pivot = None
        for r in range(j + 1, n):
            if m[j][r]:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != j + 1:
            m[pivot], m[j + 1] = m[j + 1], m[pivot]
            for row in m:
                row[pivot], row[j + 1] = row[j + 1], row[pivot]
            sign = -sign
        p = m[j][j + 1]
        result *= p
        for r in range(j + 2, n):
            f = m[j][r] / p
            if f:
                mr, mj1 = m[r], m[j + 1]
                for c in range(n):
                    mr[c] -= f * mj1[c]
                for row in m:
                    row[r] -= f * row[j + 1]
    return sign * result


def determinant(a: Matrix) -> Fraction:
    """Exact determinant by elimination with pivoting; 0 for singular input."""
    m = _copy(a)
    n = len(m)
    sign = 1
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[pivot], m[col] = m[col], m[pivot]
            sign = -sign
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                mr, mc = m[r], m[col]
                for c in range(col, n):
                    mr[c] -= f * mc[c]
    return sign * det


def mehta_wang_lhs(a: RationalLike, b: RationalLike, n: int) -> Fraction:
    """Determinant of the n x n matrix with entries (a + j - i) (b)_{i+j}.

    Indices run over 0 <= i, j <= n-1.  This is the Mehta-Wang determinant
    with every gamma ratio rewritten as a rising factorial, so any rational
    a, b are admissible.
    """
    if n < 1:
        raise ValueError("matrix size must be positive")
    a = Fraction(a)
    b = Fraction(b)
    rows = [
        [(a + j - i) * pochhammer(b, i + j) for j in range(n)] for i in range(n)
    ]
    return determinant(rows)


def mehta_wang_rhs(a: RationalLike, b: RationalLike, n: int) -> Fraction:
    """Closed form for ``mehta_wang_lhs``: a product times a terminating sum."""
    if n < 1:
        raise ValueError("matrix size must be positive")
    a = Fraction(a)
    b = Fraction(b)
    prod = Fraction(1)
    for i in range(n):
        prod *= factorial(i) * pochhammer(b, i)
    half_diff = (b - a) / 2
    half_sum = (b + a) / 2
    total = Fraction(0)
    for k in range(n + 1):
        term = (
            Fraction((-1) ** k)
            * Fraction(factorial(n), factorial(k) * factorial(n - k))
            * pochhammer(half_diff, k)
            * pochhammer(half_sum, n - k)
        )
        total += term
    return prod * total


def pfaffian_product_identity(b: RationalLike, n: int) -> Tuple[Fraction, Fraction]:
    """Both sides of the Pfaffian evaluation for entries (j - i) (b)_{i+j}.

    Returns (pfaffian, product) for the n x n skew matrix over
    0 <= i, j <= n-1, where the product is
    prod_{i=0}^{n/2-1} (2i+1)! (b)_{2i+1}.  The two agree, sign included.
    """
    if n % 2:
        raise OddSize("identity holds for even sizes")
    if n < 2:
        raise ValueError("size must be a positive even integer")
    b = Fraction(b)
    rows = [
        [(j - i) * pochhammer(b, i + j) for j in range(n)] for i in range(n)
    ]
    lhs = pfaffian(rows)
    rhs = Fraction(1)
    for i in range(n // 2):
        rhs *= factorial(2 * i + 1) * pochhammer(b, 2 * i + 1)
    return lhs, rhs


def pfaffian_reciprocal_identity(b: RationalLike, n: int) -> Tuple[Fraction, Fraction]:
    """Both sides of the Pfaffian evaluation for entries (j - i) / (b)_{i+j}.

    Returns (pfaffian, product) with the product
    prod_{i=0}^{n/2-1} (2i+1)! / (b)_{n+2i-1}.  Raises SingularParameter
    when a needed rising factorial vanishes.
    """
    if n % 2:
        raise OddSize("identity holds for even sizes")
    if n < 2:
        raise ValueError("size must be a positive even integer")
    b = Fraction(b)
    rows: List[List[Fraction]] = []
    for i in range(n):
        row = []
        for j in range(n):
            denom = pochhammer(b, i + j)
            if not denom:
                raise SingularParameter(f"(b)_{i + j} vanishes at b = {b}")
            row.append((j - i) / denom)
        rows.append(row)
    lhs = pfaffian(rows)
    rhs = Fraction(1)
    for i in range(n // 2):
        denom = pochhammer(b, n + 2 * i - 1)
        if not denom:
            raise SingularParameter(f"(b)_{n + 2 * i - 1} vanishes at b = {b}")
        rhs *= Fraction(factorial(2 * i + 1)) / denom
    return lhs, rhs
