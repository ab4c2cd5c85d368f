"""A tour of the exact identities the verify suites lean on.

Everything here is Fraction arithmetic, so "equal" means equal, not
equal up to rounding.
"""

import random
from fractions import Fraction

from freehex import (
    build_matrix,
    determinant,
    mehta_wang_lhs,
    mehta_wang_rhs,
    pfaffian,
    pfaffian_product_identity,
    pfaffian_reciprocal_identity,
)

rng = random.Random(11)

# 1. A determinant with entries (a + j - i) * (b)_{i+j} evaluates in
#    closed form.  Try it at a random rational point.
a = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
b = Fraction(rng.randint(1, 10), rng.randint(1, 4))
for n in (2, 3, 4):
    lhs = mehta_wang_lhs(a, b, n)
    rhs = mehta_wang_rhs(a, b, n)
    print(f"det family  n={n}  a={a}  b={b}:  {lhs} == {rhs}  {lhs == rhs}")
print()

# 2. Two structured Pfaffians with product evaluations.  The sign is
#    part of the claim, which is why these return both sides instead of
#    absolute values.
for n in (2, 4, 6):
    lhs, rhs = pfaffian_product_identity(Fraction(5, 2), n)
    print(f"product Pfaffian     n={n}:  {lhs == rhs}  (value {lhs})")
    lhs, rhs = pfaffian_reciprocal_identity(Fraction(5, 2), n)
    print(f"reciprocal Pfaffian  n={n}:  {lhs == rhs}  (value {lhs})")
print()

# 3. The counting matrix M_n(x) hides a reflection symmetry and a set of
#    forced zeros in its determinant, both exact in x.
n, k = 3, 1
x = Fraction(rng.randint(-7, 7), rng.randint(1, 6))
d1 = determinant(build_matrix(n, k, x).body)
d2 = determinant(build_matrix(n, k, -2 * n - x).body)
print(f"reflection   det M(x) at x={x}: {d1 == d2}")

for s in range(1, n - k):
    z = determinant(build_matrix(n, k, Fraction(-s)).body)
    print(f"integer zero       x=-{s}:  det = {z}")
for s in range(1, n):
    z = determinant(build_matrix(n, k, Fraction(-2 * s - 1, 2)).body)
    print(f"half-integer zero  x=-{Fraction(2 * s + 1, 2)}:  det = {z}")
print()

# 4. And the point of the matrix in the first place: minus its Pfaffian
#    is a tiling count.
v = -pfaffian(build_matrix(2, 0, 3).body)
print(f"-Pf M for n=2, k=0, x=3:  {v}  (an integer, and a tiling count)")
