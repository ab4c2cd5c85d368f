"""Watch the finite regions converge to the boundary-attraction laws.

Two stories in one script.  First, the exact ratio

    (tilings with the gap) / (tilings without it)

at balanced size x = n approaches the quadrature value omega_f(k, 1) as
n grows.  The convergence is logarithmically slow, which the table makes
painfully visible.  Second, the decay laws in k: the correlation falls
off like 1/(4 pi sqrt(3) k), and consecutive values contract by roughly
1 - 1/k.
"""

from freehex import (
    Triangle2,
    decay_ratio_check,
    distance_law_check,
    finite_ratio,
    omega_f,
)

print("exact finite ratio vs quadrature limit, k = 0")
w = omega_f(0, 1.0).value
print(f"  omega_f(0, 1) = {w:.12f}")
for n in (8, 32, 128, 512):
    r = float(finite_ratio(n, 0, n, Triangle2))
    print(f"  n = {n:4d}   ratio = {r:.12f}   gap to limit = {abs(r - w):.3e}")
print()

print("inverse-distance law: omega_f(k,1) * 4 pi sqrt(3) k, should drift to 1")
for k in (16, 64, 256):
    print(f"  k = {k:4d}   {distance_law_check(k):.6f}")
print()

print("contraction law: k * (omega_f(k+1,1)/omega_f(k,1) - 1), should drift to -1")
for k in (16, 64, 256):
    print(f"  k = {k:4d}   {decay_ratio_check(k):.6f}")
