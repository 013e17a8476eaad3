"""Invariant sweeps run by ``qrot verify``.

Each check walks a finite family of inputs and stops at the first
counterexample.  The symmetric determinant identity is only conjectured, so
it is reported separately and never counts as a failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable, Iterator

from . import annulus, farey, pfaffian, polygon, qcore
from .laurent import has_nonnegative_coefficients, has_positive_coefficients, is_palindromic, is_unimodal


@dataclass
class CheckResult:
    name: str
    cases: int
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def line(self) -> str:
        if self.passed:
            return f"PASS  {self.name} ({self.cases} cases)"
        return f"FAIL  {self.name}: {self.failure}"


def _run(name: str, cases: Iterable, check: Callable[[object], str | None]) -> CheckResult:
    n = 0
    for case in cases:
        n += 1
        problem = check(case)
        if problem:
            return CheckResult(name, n, f"{case}: {problem}")
    return CheckResult(name, n)


def rationals(max_num: int) -> Iterator[farey.Rational]:
    """Reduced r/s > 1 with r <= max_num."""
    for r in range(2, max_num + 1):
        for s in range(1, r):
            if gcd(r, s) == 1:
                yield farey.Rational(r, s)


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def regular_sequences(max_sum: int) -> Iterator[tuple[int, ...]]:
    for s in range(2, max_sum + 1):
        for a in compositions(s):
            if len(a) % 2 == 0:
                yield a


def negative_sequences(max_k: int, max_c: int = 5, min_k: int = 1) -> Iterator[tuple[int, ...]]:
    for k in range(min_k, max_k + 1):
        yield from itertools.product(range(2, max_c + 1), repeat=k)


# -- individual checks --------------------------------------------------------


def _genfrac(x: farey.Rational) -> str | None:
    num, den = farey.q_rational_farey(x)
    a = farey.regular_expansion(x)
    c = farey.negative_expansion(x)
    if qcore.qcf_regular(a) != (num, den):
        return "regular q-continued fraction differs from the Farey recursion"
    if qcore.qcf_negative(c) != (num, den):
        return "negative q-continued fraction differs from the Farey recursion"
    if farey.hirzebruch_convert(a) != c:
        return "conversion between expansions is wrong"
    if (num.at_one(), den.at_one()) != (x.r, x.s):
        return "q = 1 specialization is not r/s"
    return None


def _shape(x: farey.Rational) -> str | None:
    num, den = farey.q_rational_farey(x)
    for p in (num, den):
        if not (has_positive_coefficients(p) and is_unimodal(p)):
            return f"{p} is not positive unimodal"
    return None


def _paths(x: farey.Rational) -> str | None:
    a = farey.regular_expansion(x)
    T = polygon.build_fan(a)
    k, c = T.k, T.c_seq
    for target in (0, 1):
        ps = polygon.enumerate_paths(T, k + 1, target)
        if any(p.weight != p.coarea for p in ps):
            return f"weight differs from coarea on a path to {target}"
        if len({p.area + p.coarea for p in ps}) != 1:
            return f"area + coarea not constant on paths to {target}"
        if len(ps) != (x.s if target == 0 else x.r):
            return f"wrong number of paths to {target}"
    if polygon.path_generating_poly(T, k + 1, 1) != qcore.continuant_E(c):
        return "paths k+1 -> 1 do not give the numerator continuant"
    if polygon.path_generating_poly(T, k + 1, 0) != qcore.continuant_E(c[1:]):
        return "paths k+1 -> 0 do not give the denominator continuant"
    top, bottom = qcore.convergents_plus(a)
    if polygon.path_generating_poly(T, k + 2, 1) != top:
        return "paths k+2 -> 1 do not give the convergent numerator"
    if polygon.path_generating_poly(T, k + 2, 0) != bottom:
        return "paths k+2 -> 0 do not give the convergent denominator"
    if polygon.path_generating_poly(T, k, 1) != qcore.continuant_E(c[:-1]):
        return "paths k -> 1 do not give E(c1..ck-1)"
    if k >= 2 and polygon.path_generating_poly(T, k, 0) != qcore.continuant_E(c[1:-1]):
        return "paths k -> 0 do not give E(c2..ck-1)"
    return None


def _rotundus_shape(R, gaps_allowed: bool = False) -> str | None:
    # R(2, ..., 2) = 1 + q^k is the only family with zero coefficients inside the span
    positive = has_nonnegative_coefficients if gaps_allowed else has_positive_coefficients
    if not (is_palindromic(R) and positive(R)):
        return f"rotundus {R} is not palindromic with positive coefficients"
    return None


def _loops(A: annulus.AnnulusTriangulation, R) -> str | None:
    loops = annulus.enumerate_loops(A)
    if any(l.area + l.coarea != A.triangle_count for l in loops):
        return "area + coarea differs from the triangle count"
    if annulus.loop_generating_poly(A, "area") != R:
        return "area polynomial differs from the rotundus"
    if annulus.loop_generating_poly(A, "coarea") != R:
        return "coarea polynomial differs from the rotundus"
    return None


def _plus(a: tuple[int, ...]) -> str | None:
    R = qcore.rotundus_plus(a)
    problem = _rotundus_shape(R)
    if problem:
        return problem
    if R.at_one() != qcore.classical_rotundus_plus(a):
        return "q = 1 value differs from the classical rotundus"
    A = annulus.build_annulus("plus", a)
    problem = _loops(A, R)
    if problem:
        return problem
    if annulus.loop_poly_via_paths(A) != R:
        return "path decomposition differs from the loop polynomial"
    if annulus.closure_generating_poly(A) != R:
        return "closure polynomial differs from the rotundus"
    c = farey.hirzebruch_convert(a)
    if not annulus.same_annulus(A, annulus.build_annulus("minus", (c[0] + 1,) + c[1:])):
        return "T+(a) is not T-(c1+1, c2, ...)"
    return None


def _minus(c: tuple[int, ...]) -> str | None:
    R = qcore.rotundus_minus(c)
    problem = _rotundus_shape(R, gaps_allowed=all(x == 2 for x in c))
    if problem:
        return problem
    if R.at_one() != qcore.classical_rotundus_minus(c):
        return "q = 1 value differs from the classical rotundus"
    if all(x == 2 for x in c):
        return None
    A = annulus.build_annulus("minus", c)
    problem = _loops(A, R)
    if problem:
        return problem
    if annulus.count_matchings(A) != R.at_one():
        return "matching count differs from R at q = 1"
    return None


def _euler_minding(c: tuple[int, ...]) -> str | None:
    if qcore.euler_minding_E(c) != qcore.continuant_E(c):
        return "Euler-Minding E differs from the continuant"
    if len(c) >= 3 and qcore.euler_minding_R(c) != qcore.rotundus_minus(c):
        return "cyclic Euler-Minding differs from the rotundus"
    return None


def _skew(c: tuple[int, ...]) -> str | None:
    if not pfaffian.skew_identity_holds(c):
        return "skew determinant is not R^2"
    return None


def run_all(max_num: int = 20, max_k: int = 4) -> tuple[list[CheckResult], list[dict]]:
    """All sweeps, sized by the largest numerator and the largest k."""
    results = [
        _run("q-rationals: Farey = regular CF = negative CF", rationals(max_num), _genfrac),
        _run("q-rationals: positive and unimodal", rationals(max_num), _shape),
        _run("paths: weight = coarea, continuants, convergents", rationals(max_num), _paths),
        _run("T+ loops, paths, closures, T- identity", regular_sequences(2 * max_k), _plus),
        _run("T- loops and matchings", negative_sequences(max_k), _minus),
        _run("Euler-Minding expansions", negative_sequences(max_k), _euler_minding),
        _run("skew determinant identity", negative_sequences(max_k, min_k=2), _skew),
    ]
    report = list(pfaffian.conjecture_report(negative_sequences(max_k, min_k=2)))
    return results, report
