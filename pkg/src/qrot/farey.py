"""Positive rationals, their two canonical continued fractions, and the
q-rational computed by the weighted mediant recursion on the Farey graph.

Weights are stored as exponents of q.  In the starting triangle
(0/1, 1/1, 1/0) the two lower edges carry exponent 0 and the edge
0/1 -- 1/0 carries none.  Below an edge L -- R of exponent d-1 the mediant
M = L (+) R gets edges L -- M of exponent 0 and M -- R of exponent d, and

    [M]_q = (R_L + q^d R_R) / (S_L + q^d S_R).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .laurent import ONE, ZERO, LaurentPoly, shift


@dataclass(frozen=True, order=True)
class Rational:
    """Coprime pair r/s with r >= 1, s >= 0; 1/0 is the point at infinity."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 0:
            raise ValueError(f"expected a positive rational or 1/0, got {self.r}/{self.s}")
        if math.gcd(self.r, self.s) != 1:
            raise ValueError(f"{self.r}/{self.s} is not reduced; use Rational.of")

    @classmethod
    def of(cls, r: int, s: int) -> Rational:
        """Reduce silently to lowest terms."""
        if r < 1 or s < 0:
            raise ValueError(f"expected a positive rational or 1/0, got {r}/{s}")
        g = math.gcd(r, s)
        return cls(r // g, s // g)

    @classmethod
    def parse(cls, text: str) -> Rational:
        """Parse ``"r/s"`` or ``"r"``; non-reduced input is reduced."""
        parts = text.strip().split("/")
        try:
            if len(parts) == 1:
                return cls.of(int(parts[0]), 1)
            if len(parts) == 2:
                return cls.of(int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise ValueError(f"malformed rational {text!r}: {exc}") from None
        raise ValueError(f"malformed rational {text!r}")

    @property
    def is_infinity(self) -> bool:
        return self.s == 0

    def to_fraction(self) -> Fraction:
        if self.s == 0:
            raise ValueError("1/0 has no Fraction value")
        return Fraction(self.r, self.s)

    def __str__(self) -> str:
        return f"{self.r}/{self.s}"


def _require_gt_one(x: Rational) -> None:
    if x.s == 0 or x.r <= x.s:
        raise ValueError(f"expansion requires a rational > 1, got {x}")


def euclid(x: Rational) -> list[int]:
    """Plain Euclidean continued fraction of r/s."""
    r, s = x.r, x.s
    out = []
    while s:
        q, rem = divmod(r, s)
        out.append(q)
        r, s = s, rem
    return out


def regular_expansion(x: Rational) -> tuple[int, ...]:
    """The even-length expansion [a1, ..., a2m] with all a_i >= 1."""
    _require_gt_one(x)
    a = euclid(x)
    if len(a) % 2:
        if a[-1] >= 2:
            a[-1] -= 1
            a.append(1)
        else:
            a.pop()
            a[-1] += 1
    return tuple(a)


def negative_expansion(x: Rational) -> tuple[int, ...]:
    """Hirzebruch-Jung expansion [[c1, ..., ck]] with all c_i >= 2."""
    _require_gt_one(x)
    r, s = x.r, x.s
    out = []
    while s:
        c = -(-r // s)
        out.append(c)
        r, s = s, c * s - r
    return tuple(out)


def evaluate_regular(a: Sequence[int]) -> Fraction:
    v = Fraction(a[-1])
    for x in reversed(a[:-1]):
        v = x + 1 / v
    return v


def evaluate_negative(c: Sequence[int]) -> Fraction:
    v = Fraction(c[-1])
    for x in reversed(c[:-1]):
        v = x - 1 / v
    return v


def hirzebruch_convert(a: Sequence[int]) -> tuple[int, ...]:
    """(a1, ..., a2m) -> (a1+1, 2^(a2-1), a3+2, 2^(a4-1), ..., a2m-1 + 2, 2^(a2m - 1)).

    The first entry is a1+1, not a1+2: only then does the result evaluate to
    the same rational (7/5 = [1,2,1,1] = [[2,2,3]]).
    """
    if not a or len(a) % 2 or any(x < 1 for x in a):
        raise ValueError(f"invalid regular sequence {tuple(a)}")
    out: list[int] = []
    for i in range(0, len(a), 2):
        out.append(a[i] + (1 if i == 0 else 2))
        out.extend([2] * (a[i + 1] - 1))
    return tuple(out)


def regular_from_negative(c: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`hirzebruch_convert`."""
    if not c or any(x < 2 for x in c):
        raise ValueError(f"invalid negative sequence {tuple(c)}")
    a: list[int] = []
    for i, x in enumerate(c):
        if i == 0:
            a.extend([x - 1, 1])
        elif x == 2:
            a[-1] += 1
        else:
            a.extend([x - 2, 1])
    return tuple(a)


# -- the weighted Farey graph ---------------------------------------------


@dataclass(frozen=True)
class FareyNode:
    """A Farey vertex together with its q-deformed numerator/denominator."""

    r: int
    s: int
    num: LaurentPoly
    den: LaurentPoly

    @property
    def rational(self) -> tuple[int, int]:
        return (self.r, self.s)


ZERO_NODE = FareyNode(0, 1, ZERO, ONE)
INF_NODE = FareyNode(1, 0, ONE, ZERO)
ONE_NODE = FareyNode(1, 1, ONE, ONE)


@dataclass(frozen=True)
class FareyTriangle:
    """Triangle (left, right, mediant); ``top`` is the exponent on left--right
    (None for the excluded edge 0/1 -- 1/0)."""

    left: FareyNode
    right: FareyNode
    mediant: FareyNode
    top: int | None
    left_exp: int
    right_exp: int


def _mediant(L: FareyNode, R: FareyNode, d: int) -> FareyNode:
    return FareyNode(L.r + R.r, L.s + R.s, L.num + shift(R.num, d), L.den + shift(R.den, d))


def farey_descent(x: Rational) -> Iterator[FareyTriangle]:
    """Triangles crossed by the vertical line through x, from the root
    triangle (0/1, 1/0, 1/1) down to the triangle whose mediant is x."""
    if x.is_infinity:
        return
    yield FareyTriangle(ZERO_NODE, INF_NODE, ONE_NODE, None, 0, 0)
    if (x.r, x.s) == (1, 1):
        return
    if x.r < x.s:
        L, R, top = ZERO_NODE, ONE_NODE, 0
    else:
        L, R, top = ONE_NODE, INF_NODE, 0
    while True:
        d = top + 1
        M = _mediant(L, R, d)
        yield FareyTriangle(L, R, M, top, 0, d)
        if (M.r, M.s) == (x.r, x.s):
            return
        # x < M  <=>  x.r * M.s < M.r * x.s
        if x.r * M.s < M.r * x.s:
            R, top = M, 0
        else:
            L, top = M, d


def q_rational_farey(x: Rational) -> tuple[LaurentPoly, LaurentPoly]:
    """(R, S) with [x]_q = R/S, by the weighted mediant recursion."""
    if x.is_infinity:
        return ONE, ZERO
    last = None
    for last in farey_descent(x):
        pass
    return last.mediant.num, last.mediant.den
