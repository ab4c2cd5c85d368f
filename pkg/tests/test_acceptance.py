"""End-to-end acceptance checks.

Each test prints one PASS or FAIL line so the whole battery reads as a
checklist.  Exact checks compare integers or Fractions; floating checks
state their tolerance inline.
"""

import math
import random
import time
from fractions import Fraction

from freehex.analysis import (
    decay_ratio_check,
    distance_law_check,
    f5_4_partial,
    integral_I,
    omega_f,
)
from freehex.counting import (
    build_matrix,
    count_gap_closed,
    count_gap_pfaffian,
    count_lozenge_closed,
    finite_ratio,
    macmahon,
)
from freehex.oracle import count_matchings, count_nilp
from freehex.pfaffian import (
    determinant,
    mehta_wang_lhs,
    mehta_wang_rhs,
    pf_by_definition,
    pfaffian,
    pfaffian_product_identity,
    pfaffian_reciprocal_identity,
)
from freehex.region import HorizontalLozenge, RegionSpec, Triangle2, build_region


def _report(num: int, desc: str, ok: bool) -> None:
    print(f"{'PASS' if ok else 'FAIL'} criterion {num}: {desc}")
    assert ok, f"criterion {num}: {desc}"


def _rand_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _rand_skew(rng: random.Random, size: int):
    body = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            v = _rand_fraction(rng)
            body[i][j] = v
            body[j][i] = -v
    return body


def test_criterion_01_three_route_agreement():
    start = time.monotonic()
    ok = True
    for n in (1, 2, 3):
        for x in (1, 2, 3):
            for k in range(n):
                closed = count_gap_closed(n, k, x)
                matrix = count_gap_pfaffian(n, k, x)
                brute = count_matchings(build_region(RegionSpec(n, x, Triangle2(k))))
                paths = count_nilp(n, x, k)
                ok &= closed == matrix == brute == paths
    elapsed = time.monotonic() - start
    ok &= elapsed < 300.0
    _report(1, f"three independent counting routes agree exactly ({elapsed:.1f}s)", ok)


def test_criterion_02_product_formula_anchors():
    ok = macmahon(1, 1) == 10 == count_matchings(build_region(RegionSpec(1, 1)))
    ok &= macmahon(2, 1) == 126 == count_matchings(build_region(RegionSpec(2, 1)))
    ok &= all(macmahon(n, 0) == 1 for n in range(1, 7))
    _report(2, "hole-free product formula matches enumeration", ok)


def test_criterion_03_lozenge_closed_form():
    ok = True
    for n in (1, 2, 3):
        for x in (1, 2, 3):
            for k in range(n):
                g = build_region(RegionSpec(n, x, HorizontalLozenge(k)))
                ok &= count_lozenge_closed(n, k, x) == count_matchings(g)
    _report(3, "horizontal-lozenge closed form matches enumeration", ok)


def test_criterion_04_widest_gap_specialization():
    ok = True
    for n in range(1, 7):
        for x in range(1, 7):
            ok &= count_gap_closed(n + 1, n, x - 1) == macmahon(n, x)
    _report(4, "widest-gap count collapses to the hole-free product", ok)


def test_criterion_05_reflection_symmetry():
    rng = random.Random(20260822)
    ok = True
    for n in (1, 2, 3):
        for k in range(n):
            for _ in range(5):
                x = _rand_fraction(rng)
                lhs = determinant(build_matrix(n, k, x).body)
                rhs = determinant(build_matrix(n, k, -2 * n - x).body)
                ok &= lhs == rhs
    _report(5, "matrix determinant symmetric under x -> -2n-x", ok)


def test_criterion_06_vanishing_loci():
    ok = True
    for n in (1, 2, 3):
        for k in range(n):
            for s in range(1, n - k):
                ok &= determinant(build_matrix(n, k, Fraction(-s)).body) == 0
            for s in range(1, n):
                ok &= determinant(build_matrix(n, k, Fraction(-2 * s - 1, 2)).body) == 0
    _report(6, "determinant vanishes at integer and half-integer loci", ok)


def test_criterion_07_structured_identities():
    rng = random.Random(7)
    ok = True
    for _ in range(20):
        a = _rand_fraction(rng)
        b = Fraction(rng.randint(1, 12), rng.randint(1, 4))
        for n in range(1, 7):
            ok &= mehta_wang_lhs(a, b, n) == mehta_wang_rhs(a, b, n)
    for n in (2, 4, 6):
        b = Fraction(rng.randint(1, 10), rng.randint(1, 3))
        lhs, rhs = pfaffian_product_identity(b, n)
        ok &= lhs == rhs
        lhs, rhs = pfaffian_reciprocal_identity(b, n)
        ok &= lhs == rhs
    for n in (1, 3, 5):
        b = Fraction(rng.randint(1, 10), rng.randint(1, 3))
        ok &= mehta_wang_lhs(Fraction(0), b, n) == 0
    _report(7, "determinant family, product and reciprocal Pfaffian identities", ok)


def test_criterion_08_pfaffian_engine():
    rng = random.Random(8)
    ok = True
    for size in (2, 4, 6, 8):
        for _ in range(25):
            body = _rand_skew(rng, size)
            p = pfaffian(body)
            ok &= p == pf_by_definition(body)
            ok &= p * p == determinant(body)
    _report(8, "elimination Pfaffian matches definition and squares to det", ok)


def test_criterion_09_scaled_integral_limit():
    devs = [abs(integral_I(1.0, k) * math.sqrt(8 * k / math.pi) - 1.0) for k in (50, 100, 200)]
    ok = devs[0] > devs[1] > devs[2]
    ok &= devs[2] < 0.05
    _report(9, "peak integral approaches its scaling limit (5% at k=200)", ok)


def test_criterion_10_inverse_distance_law():
    devs = [abs(distance_law_check(k) - 1.0) for k in (32, 64, 128, 256)]
    ok = all(a > b for a, b in zip(devs, devs[1:]))
    ok &= devs[-1] < 0.10
    _report(10, "correlation falls off as 1/(4 pi sqrt(3) k) (10% at k=256)", ok)


def test_criterion_11_decay_ratio_law():
    devs = [abs(decay_ratio_check(k) + 1.0) for k in (64, 128, 256)]
    ok = all(a > b for a, b in zip(devs, devs[1:]))
    ok &= devs[-1] < 0.10
    _report(11, "successive-k ratio approaches 1 - 1/k (10% at k=256)", ok)


def test_criterion_12_off_symmetric_increment():
    ok = True
    for xi in (0.5, 2.0):
        target = 4.0 * math.log(2.0 / (1.0 + xi))
        inc = omega_f(201, xi).log_value - omega_f(200, xi).log_value
        ok &= abs(inc - target) <= 0.01 * abs(target)
    _report(12, "log-increment matches 4 log(2/(1+xi)) (1% at k=200)", ok)


def test_criterion_13_finite_size_convergence():
    start = time.monotonic()
    count_gap_closed(512, 0, 512)
    elapsed = time.monotonic() - start
    ok = elapsed < 60.0
    for k in (0, 1):
        w = omega_f(k, 1.0).value
        d64 = abs(float(finite_ratio(64, k, 64, Triangle2)) - w)
        d512 = abs(float(finite_ratio(512, k, 512, Triangle2)) - w)
        ok &= d512 < d64
    _report(13, f"finite-size ratio converges toward quadrature ({elapsed:.1f}s at n=512)", ok)


def test_criterion_14_terminating_sum_limit():
    target = math.sqrt(2.0 / math.pi) * integral_I(1.0, 0)
    devs = [
        abs(float(f5_4_partial(n, 0, 1)) / math.sqrt(n) - target)
        for n in (256, 1024, 4096)
    ]
    ok = devs[0] > devs[1] > devs[2]
    _report(14, "scaled terminating sum approaches the quadrature value", ok)
