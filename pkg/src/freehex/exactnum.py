"""Exact arithmetic kernels used by every other module.

Integers are Python ints (arbitrary precision already); rationals are
``fractions.Fraction``, which normalizes eagerly and compares structurally.
On top of those this module supplies the combinatorial primitives: factorial,
rising factorial, generalized binomial, the signed summation convention for
out-of-order bounds, and exact polynomial interpolation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Tuple, Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def factorial(m: int) -> int:
    """m! for m >= 0."""
    if m < 0:
        raise ValueError("factorial needs a nonnegative argument")
    return math.factorial(m)


def pochhammer(a: RationalLike, m: int) -> Fraction:
    """Rising factorial a(a+1)...(a+m-1); the empty product (m=0) is 1.

    The inner loop runs over integers: with a = p/q the product equals
    prod(p + i*q) / q**m, which avoids m Fraction normalizations.
    """
    if m < 0:
        raise ValueError("pochhammer length must be nonnegative")
    a = Fraction(a)
    p, q = a.numerator, a.denominator
    acc = 1
    v = p
    for _ in range(m):
        acc *= v
        v += q
    return Fraction(acc, q**m)


def binomial(r: RationalLike, j: int) -> Fraction:
    """Generalized binomial coefficient r over j.

    Zero for j < 0; otherwise r(r-1)...(r-j+1)/j! with rational r allowed.
    """
    if j < 0:
        return Fraction(0)
    r = Fraction(r)
    p, q = r.numerator, r.denominator
    acc = 1
    v = p
    for _ in range(j):
        acc *= v
        v -= q
    return Fraction(acc, q**j * math.factorial(j))


def signed_sum(m: int, n: int, term: Callable[[int], RationalLike]) -> Fraction:
    """Sum of term(t) for t = m .. n-1 under the signed convention.

    Ordinary sum when n > m, zero when n == m, and minus the sum over
    t = n .. m-1 when n < m.  This is the convention that lets summation
    identities proved for one bound ordering hold for all orderings.
    """
    if n > m:
        return sum((Fraction(term(t)) for t in range(m, n)), Fraction(0))
    if n == m:
        return Fraction(0)
    return -sum((Fraction(term(t)) for t in range(n, m)), Fraction(0))


def interpolate_value(
    points: Sequence[Tuple[RationalLike, RationalLike]], at: RationalLike
) -> Fraction:
    """Value at ``at`` of the unique polynomial through the given points.

    Exact Lagrange interpolation over rationals.  The abscissae must be
    pairwise distinct; the degree is len(points) - 1.  Used to evaluate
    expressions like p(x)/(x - x0) at x = x0 without a polynomial ring:
    sample away from the root and extrapolate back.
    """
    at = Fraction(at)
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    total = Fraction(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        w = yi
        for j, xj in enumerate(xs):
            if j != i:
                w *= (at - xj) / (xi - xj)
        total += w
    return total
