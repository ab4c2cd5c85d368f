"""Self-check suites behind the ``verify`` subcommand.

Five suites mirror the package layers: arith, pfaffian, counting,
identities, analysis.  Every check is deterministic given (seed, max_n)
and reports a name, a boolean, and how many cases it covered.  Exact
checks compare rationals for equality; float checks use wide tolerances
that sit far above quadrature error.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from . import analysis, counting, exactnum, oracle, region
from .pfaffian import (
    determinant,
    mehta_wang_lhs,
    mehta_wang_rhs,
    pf_by_definition,
    pfaffian,
    pfaffian_product_identity,
    pfaffian_reciprocal_identity,
)
from .errors import OddSize, PoleInRange, SingularParameter


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    cases: int


SUITE_NAMES = ("arith", "pfaffian", "counting", "identities", "analysis")


def _rand_fraction(rng: random.Random, span: int = 9, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def _rand_skew(rng: random.Random, size: int) -> List[List[Fraction]]:
    m = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            v = _rand_fraction(rng)
            m[i][j] = v
            m[j][i] = -v
    return m


# ---------------------------------------------------------------- arith


def run_arith(seed: int, max_n: int) -> List[CheckResult]:
    rng = random.Random(seed)
    out: List[CheckResult] = []

    ok, cases = True, 0
    for _ in range(50):
        a = _rand_fraction(rng)
        m = rng.randint(0, 8)
        ok &= exactnum.pochhammer(a, m + 1) == exactnum.pochhammer(a, m) * (a + m)
        cases += 1
    for m in range(9):
        ok &= exactnum.pochhammer(1, m) == exactnum.factorial(m)
        cases += 1
    out.append(CheckResult("arith", "pochhammer recurrence", ok, cases))

    ok, cases = True, 0
    for _ in range(50):
        r = _rand_fraction(rng)
        j = rng.randint(1, 10)
        ok &= exactnum.binomial(r, j) == exactnum.binomial(r - 1, j - 1) + exactnum.binomial(r - 1, j)
        cases += 1
    ok &= exactnum.binomial(Fraction(7), 2) == 21
    ok &= exactnum.binomial(Fraction(-1, 2), 1) == Fraction(-1, 2)
    cases += 2
    out.append(CheckResult("arith", "binomial Pascal rule", ok, cases))

    ok, cases = True, 0
    for _ in range(20):
        a = rng.randint(-6, 6)
        b = rng.randint(-6, 6)

        def f(t: int) -> Fraction:
            return Fraction(t * t - 3 * t, 2)

        ok &= exactnum.signed_sum(a, b, f) + exactnum.signed_sum(b, a, f) == 0
        cases += 1
    ok &= exactnum.signed_sum(3, 3, lambda t: Fraction(1)) == 0
    ok &= exactnum.signed_sum(5, 2, lambda t: Fraction(1)) == -3
    cases += 2
    out.append(CheckResult("arith", "signed summation antisymmetry", ok, cases))

    ok, cases = True, 0
    for _ in range(10):
        coeffs = [_rand_fraction(rng) for _ in range(4)]

        def poly(t: Fraction) -> Fraction:
            acc = Fraction(0)
            for c in reversed(coeffs):
                acc = acc * t + c
            return acc

        nodes = [Fraction(t) for t in range(1, 6)]
        pts = [(t, poly(t)) for t in nodes]
        at = _rand_fraction(rng)
        ok &= exactnum.interpolate_value(pts, at) == poly(at)
        cases += 1
    out.append(CheckResult("arith", "exact interpolation", ok, cases))

    return out


# ------------------------------------------------------------- pfaffian


def run_pfaffian(seed: int, max_n: int) -> List[CheckResult]:
    rng = random.Random(seed)
    out: List[CheckResult] = []

    ok, cases = True, 0
    corpus = []
    for _ in range(25):
        for size in (2, 4, 6, 8):
            corpus.append(_rand_skew(rng, size))
    for m in corpus:
        ok &= pfaffian(m) == pf_by_definition(m)
        cases += 1
    out.append(CheckResult("pfaffian", "elimination matches definition", ok, cases))

    ok, cases = True, 0
    for m in corpus:
        ok &= pfaffian(m) ** 2 == determinant(m)
        cases += 1
    out.append(CheckResult("pfaffian", "square equals determinant", ok, cases))

    ok, cases = True, 0
    for _ in range(20):
        size = rng.choice((4, 6))
        m = _rand_skew(rng, size)
        i, j = sorted(rng.sample(range(size), 2))
        swapped = [row[:] for row in m]
        swapped[i], swapped[j] = swapped[j], swapped[i]
        for row in swapped:
            row[i], row[j] = row[j], row[i]
        ok &= pfaffian(swapped) == -pfaffian(m)
        cases += 1
    out.append(CheckResult("pfaffian", "transposition flips sign", ok, cases))

    ok = pf_by_definition([]) == 1 and pfaffian([]) == 1
    try:
        pfaffian([[Fraction(0)] * 3 for _ in range(3)])
        ok = False
    except OddSize:
        pass
    out.append(CheckResult("pfaffian", "edge cases", ok, 2))

    return out


# ------------------------------------------------------------- counting


def run_counting(seed: int, max_n: int) -> List[CheckResult]:
    out: List[CheckResult] = []

    ok, cases = True, 0
    for n in range(1, max_n + 1):
        for x in (1, 2):
            for k in range(n):
                closed = counting.count_gap_closed(n, k, x)
                ok &= closed == counting.count_gap_pfaffian(n, k, x)
                cases += 1
                g = region.build_region(region.RegionSpec(n, x, region.Triangle2(k)))
                if len(g.cells) <= 120:
                    ok &= closed == oracle.count_matchings(g)
                    cases += 1
                if n <= 3 and x <= 4:
                    ok &= closed == oracle.count_nilp(n, x, k)
                    cases += 1
    out.append(CheckResult("counting", "triangular gap route agreement", ok, cases))

    ok, cases = True, 0
    for n in range(1, max_n + 1):
        for x in (1, 2):
            for k in range(n):
                g = region.build_region(region.RegionSpec(n, x, region.HorizontalLozenge(k)))
                if len(g.cells) <= 120:
                    ok &= counting.count_lozenge_closed(n, k, x) == oracle.count_matchings(g)
                    cases += 1
    out.append(CheckResult("counting", "lozenge gap closed vs matchings", ok, cases))

    ok = counting.macmahon(1, 1) == 10 and counting.macmahon(2, 1) == 126
    cases = 2
    for n in range(1, 7):
        ok &= counting.macmahon(n, 0) == 1
        cases += 1
    for n in range(1, max_n + 1):
        for x in (1, 2):
            g = region.build_region(region.RegionSpec(n, x))
            if len(g.cells) <= 120:
                ok &= counting.macmahon(n, x) == oracle.count_matchings(g)
                cases += 1
            ok &= counting.macmahon(n, x) == counting.count_free_pfaffian(n, x)
            cases += 1
    out.append(CheckResult("counting", "hole-free product formula", ok, cases))

    ok, cases = True, 0
    for n in range(1, 5):
        for x in range(1, 5):
            ok &= counting.count_gap_closed(n + 1, n, x - 1) == counting.macmahon(n, x)
            cases += 1
    out.append(CheckResult("counting", "forced-ring specialization", ok, cases))

    ok, cases = True, 0
    for n in range(1, max_n + 1):
        for x in (1, 2):
            free = counting.macmahon(n, x)
            for k in range(n):
                # No monotonicity under gap removal: the gap changes how
                # many boundary cells go uncovered, so only positivity and
                # the exact quotient are invariant.
                gap = counting.count_gap_closed(n, k, x)
                loz = counting.count_lozenge_closed(n, k, x)
                ok &= gap > 0 and loz > 0
                ratio = counting.finite_ratio(n, k, x, region.Triangle2)
                ok &= ratio == Fraction(gap, free)
                ok &= counting.finite_ratio(n, k, x, region.HorizontalLozenge) == Fraction(loz, free)
                cases += 3
    out.append(CheckResult("counting", "gap ratios", ok, cases))

    ok, cases = True, 0
    for n in (1, 2):
        for k in range(n):
            direct = -pfaffian(counting.build_matrix(n, k, 0).body)
            ok &= direct == counting.count_gap_closed(n, k, 0)
            cases += 1
    out.append(CheckResult("counting", "matrix route at zero width", ok, cases))

    ok, cases = True, 0
    for n in (2, 3):
        for x in (-2, -1, 0, 1, 2):
            for i in range(1, 2 * n + 1):
                for j in range(1, 2 * n + 1):
                    ok &= counting.q_entry(i, j, n, x) == counting.q_entry_sumform(i, j, n, x)
                    cases += 1
    out.append(CheckResult("counting", "entry sum-form equivalence", ok, cases))

    return out


# ----------------------------------------------------------- identities


def _det_of(n: int, k: int, x: Fraction) -> Fraction:
    return determinant(counting.build_matrix(n, k, x).body)


def _strip_factor_at(values: Sequence[Tuple[Fraction, Fraction]], power: int) -> Fraction:
    # values sample p(t) on t = 1, 2, ...; returns (p(t)/t^power) at t = 0,
    # exact provided enough samples for the quotient's degree.
    pts = [(t, v / t**power) for t, v in values]
    return exactnum.interpolate_value(pts, Fraction(0))


def _block_factorization_check() -> Tuple[bool, int]:
    # Size 6 matrix at n=2, k=0: rows 3..4 vanish at x=-1, and stripping
    # one factor of (x+1) splits the Pfaffian into the deleted-rows
    # Pfaffian times the Pfaffian of the stripped 2x2 remainder.
    n, k, s = 2, 0, 1
    a, b = 2 * n - 2 * s, 2 * n
    full = counting.build_matrix(n, k, Fraction(-s)).body
    ok = all(
        full[i - 1][j] == 0 for i in range(a + 1, b + 1) for j in range(2 * n + 2)
    )
    samples = [
        (Fraction(t), pfaffian(counting.build_matrix(n, k, Fraction(t - s)).body))
        for t in range(1, 42)
    ]
    lhs = _strip_factor_at(samples, (b - a) // 2)
    keep = [i for i in range(2 * n + 2) if not a <= i < b]
    reduced = [[full[i][j] for j in keep] for i in keep]
    entry_samples = [
        (Fraction(t), counting.q_entry(a + 1, b, n, Fraction(t - s))) for t in range(1, 12)
    ]
    remainder = _strip_factor_at(entry_samples, 1)
    rhs = pfaffian(reduced) * remainder
    return ok and lhs == rhs, 2


def run_identities(seed: int, max_n: int) -> List[CheckResult]:
    rng = random.Random(seed)
    out: List[CheckResult] = []

    ok, cases = True, 0
    for _ in range(20):
        a = _rand_fraction(rng)
        b = Fraction(rng.randint(1, 12), rng.randint(1, 4))
        for n in range(1, 7):
            ok &= mehta_wang_lhs(a, b, n) == mehta_wang_rhs(a, b, n)
            cases += 1
    out.append(CheckResult("identities", "determinant evaluation family", ok, cases))

    ok, cases = True, 0
    for n in (2, 4, 6):
        b = Fraction(rng.randint(1, 10), rng.randint(1, 3))
        lhs, rhs = pfaffian_product_identity(b, n)
        ok &= lhs == rhs
        lhs, rhs = pfaffian_reciprocal_identity(b, n)
        ok &= lhs == rhs
        cases += 2
    out.append(CheckResult("identities", "structured Pfaffian evaluations", ok, cases))

    ok, cases = True, 0
    for n in (1, 3, 5):
        b = Fraction(rng.randint(1, 10), rng.randint(1, 3))
        ok &= mehta_wang_lhs(Fraction(0), b, n) == 0
        cases += 1
    out.append(CheckResult("identities", "odd-size vanishing", ok, cases))

    ok, cases = True, 0
    for n in range(1, 4):
        for k in range(n):
            for _ in range(5):
                x = _rand_fraction(rng)
                ok &= _det_of(n, k, x) == _det_of(n, k, -2 * n - x)
                cases += 1
    out.append(CheckResult("identities", "determinant reflection symmetry", ok, cases))

    ok, cases = True, 0
    for n in range(1, 4):
        for k in range(n):
            for s in range(1, n - k):
                ok &= _det_of(n, k, Fraction(-s)) == 0
                cases += 1
            for s in range(1, n):
                ok &= _det_of(n, k, Fraction(-2 * s - 1, 2)) == 0
                cases += 1
    out.append(CheckResult("identities", "determinant vanishing loci", ok, cases))

    ok, cases = _block_factorization_check()
    out.append(CheckResult("identities", "factor-stripped block split", ok, cases))

    ok, cases = True, 0
    for n, k, x in ((2, 0, 1), (3, 1, 2), (4, 2, 3), (5, 0, 2)):
        pre = Fraction(math.comb(4 * k + 1, 2 * k) * math.factorial(n + k))
        pre /= exactnum.pochhammer(x + n - k, 2 * k + 1)
        pre *= exactnum.pochhammer(Fraction(1, 2), 2 * n)
        pre /= exactnum.pochhammer(Fraction(2 * x + 1, 2), 2 * n)
        pre *= exactnum.pochhammer(x + 1, n - k - 1) * exactnum.pochhammer(x + n + k + 1, n - k - 1)
        pre /= exactnum.factorial(n - k - 1) ** 2 * exactnum.pochhammer(n + k + 1, n - k)
        bracket = (x + 2 * n) * analysis.f5_4_partial(n, k, Fraction(x, n)) - x * analysis.f5_4_partial(
            n, k, Fraction(-2 * n - x, n)
        )
        ok &= pre * bracket == counting.finite_ratio(n, k, x, region.Triangle2)
        cases += 1
    out.append(CheckResult("identities", "hypergeometric ratio form", ok, cases))

    return out


# ------------------------------------------------------------- analysis


def run_analysis(seed: int, max_n: int) -> List[CheckResult]:
    out: List[CheckResult] = []

    ok, cases = True, 0
    for k in (0, 5, 20):
        for beta in (1.0, -3.0, 0.7):
            a = analysis.integral_I(beta, k)
            b = analysis._integral_reference(beta, k)
            ok &= abs(a - b) <= 1e-8 * abs(a)
            cases += 1
    out.append(CheckResult("analysis", "substitution cross-check", ok, cases))

    ok, cases = True, 0
    for k in (0, 5, 50):
        for xi in (0.5, 1.0, 2.0):
            a = analysis.omega_f(k, xi).value
            b = analysis._omega_two_route(k, xi)
            ok &= abs(a - b) <= 1e-10 * abs(a)
            cases += 1
    out.append(CheckResult("analysis", "one vs two integral forms", ok, cases))

    ok = abs(analysis.integral_I(1.0, 100) * math.sqrt(8 * 100 / math.pi) - 1.0) < 0.05
    out.append(CheckResult("analysis", "boundary integral normalization", ok, 1))

    ok = abs(analysis.distance_law_check(64) - 1.0) < 0.05
    ok &= abs(analysis.decay_ratio_check(64) + 1.0) < 0.05
    prev = analysis.omega_f(9, 1.0).value
    ok &= 0.0 < analysis.omega_f(10, 1.0).value < prev
    out.append(CheckResult("analysis", "inverse-distance laws", ok, 3))

    ok, cases = True, 0
    for xi in (0.5, 2.0):
        d = analysis.omega_f(201, xi).log_value - analysis.omega_f(200, xi).log_value
        target = 4.0 * math.log(2.0 / (1.0 + xi))
        ok &= abs(d - target) <= 0.01 * abs(target)
        cases += 1
    out.append(CheckResult("analysis", "exponential increment law", ok, cases))

    d400 = analysis.integral_difference(400)
    ok = abs(d400 * math.sqrt(2 * 400) / math.sqrt(math.pi) - 1.0) < 0.05
    for k in (0, 10, 100):
        ok &= analysis.integral_difference(k + 1) < analysis.integral_difference(k)
    ok &= analysis.integral_difference(0) > 0.0
    out.append(CheckResult("analysis", "integral difference decay", ok, 5))

    ok, cases = True, 0
    for n in (1, 3, 7):
        ok &= analysis.f5_4_partial(n, n - 1, Fraction(1)) == 1
        cases += 1
    for l in range(99):
        ok &= 0 < analysis._summand_step(100, 0, 1, 1, l) < 1
        cases += 1
    direct = Fraction(0)
    n, k, bn = 9, 2, Fraction(4, 3)
    term = Fraction(1)
    for l in range(n - k):
        direct += term
        if l < n - k - 1:
            term *= analysis._summand_step(n, k, bn.numerator, bn.denominator, l)
    ok &= analysis.f5_4_partial(n, k, bn) == direct
    cases += 1
    out.append(CheckResult("analysis", "terminating sum structure", ok, cases))

    ok, cases = True, 0
    for k in (0, 1):
        w = analysis.omega_f(k, 1.0).value
        d16 = abs(float(counting.finite_ratio(16, k, 16, region.Triangle2)) - w)
        d64 = abs(float(counting.finite_ratio(64, k, 64, region.Triangle2)) - w)
        ok &= d64 < d16
        cases += 1
    out.append(CheckResult("analysis", "finite-size ratio convergence", ok, cases))

    ok = True
    try:
        analysis.integral_I(-0.5, 0)
        ok = False
    except PoleInRange:
        pass
    try:
        analysis.omega_f(3, 0.0)
        ok = False
    except PoleInRange:
        pass
    try:
        analysis.f5_4_partial(6, 0, Fraction(-2, 6))
        ok = False
    except SingularParameter:
        pass
    out.append(CheckResult("analysis", "guard rails", ok, 3))

    ok = abs(analysis.omega_asymptotic(1, 1.0) * 4 * math.pi * math.sqrt(3.0) - 1.0) < 1e-12
    ok &= abs(analysis.omega_asymptotic(1, 1.0) / analysis.omega_asymptotic(2, 1.0) - 2.0) < 1e-12
    r = analysis.omega_asymptotic(7, 2.0) / analysis.omega_asymptotic(6, 2.0)
    ok &= abs(r - (7 / 6) ** -1 * (2 / 3) ** 4) < 1e-12
    out.append(CheckResult("analysis", "asymptotic law anchors", ok, 3))

    return out


_SUITES: Dict[str, Callable[[int, int], List[CheckResult]]] = {
    "arith": run_arith,
    "pfaffian": run_pfaffian,
    "counting": run_counting,
    "identities": run_identities,
    "analysis": run_analysis,
}


def run(suite: str, seed: int = 0, max_n: int = 2) -> List[CheckResult]:
    """Run one named suite, or all of them in fixed order."""
    if suite == "all":
        results: List[CheckResult] = []
        for name in SUITE_NAMES:
            results.extend(_SUITES[name](seed, max_n))
        return results
    if suite not in _SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return _SUITES[suite](seed, max_n)
