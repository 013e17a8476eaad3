"""Exact Laurent polynomials in one variable ``q`` with integer coefficients.

Values are immutable.  Internally a polynomial is a valuation (lowest
exponent) plus a dense tuple of coefficients trimmed so that both ends are
nonzero; the zero polynomial has an empty tuple.  The public ``coeffs``
view is the sparse ``{exponent: coefficient}`` map with zeros dropped.

>>> p = LaurentPoly({0: 1, 1: 1})
>>> str(p * p)
'1 + 2*q + q^2'
>>> str(shift(p, -1))
'q^-1 + 1'
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence


class LaurentPoly:
    """Element of Z[q, q^-1]."""

    __slots__ = ("_val", "_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        if not coeffs:
            self._set(0, ())
            return
        lo = min(coeffs)
        hi = max(coeffs)
        dense = [0] * (hi - lo + 1)
        for e, c in coeffs.items():
            dense[e - lo] += int(c)
        self._set(lo, dense)

    def _set(self, val: int, dense: Sequence[int]) -> None:
        l, r = 0, len(dense)
        while l < r and dense[l] == 0:
            l += 1
        while r > l and dense[r - 1] == 0:
            r -= 1
        if l == r:
            self._val, self._c = 0, ()
        else:
            self._val, self._c = val + l, tuple(dense[l:r])
        self._hash = None

    @classmethod
    def from_dense(cls, min_degree: int, coeffs: Iterable[int]) -> LaurentPoly:
        """Build from a lowest exponent and a dense coefficient list."""
        return _make(min_degree, [int(c) for c in coeffs])

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls.from_dense(exponent, (coefficient,))

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls.from_dense(0, (c,))

    # -- structure -------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return {self._val + i: c for i, c in enumerate(self._c) if c}

    @property
    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return self._val

    @property
    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return self._val + len(self._c) - 1

    def dense(self) -> tuple[int, ...]:
        """Coefficients over [min_degree, max_degree], zeros included."""
        return self._c

    def coefficient(self, exponent: int) -> int:
        i = exponent - self._val
        return self._c[i] if 0 <= i < len(self._c) else 0

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def at_one(self) -> int:
        """Specialization q = 1."""
        return sum(self._c)

    def __call__(self, q):
        """Evaluate at ``q`` (int, Fraction, or anything supporting ``**``)."""
        return sum(c * q ** (self._val + i) for i, c in enumerate(self._c) if c)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        q = LaurentPoly.__new__(LaurentPoly)
        q._val, q._c, q._hash = self._val, tuple(-c for c in self._c), None
        return q

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._c) == 1 and self._c[0] in (1, -1):
                return LaurentPoly.monomial(self._val * n, self._c[0] ** -n)
            raise ValueError("negative power of a non-unit")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._val == other._val and self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._val, self._c))
        return self._hash

    # -- I/O -------------------------------------------------------------

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"LaurentPoly('{to_text(self)}')"

    def to_json(self) -> dict:
        return {"min": self._val, "coeffs": list(self._c)}

    @classmethod
    def from_json(cls, obj: Mapping) -> LaurentPoly:
        return cls.from_dense(int(obj["min"]), obj["coeffs"])


def _make(val: int, dense: Sequence[int]) -> LaurentPoly:
    # trusted constructor: ``dense`` already holds ints
    p = LaurentPoly.__new__(LaurentPoly)
    p._set(val, dense)
    return p


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
Q = LaurentPoly.monomial(1)


def add(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    if not p._c:
        return r
    if not r._c:
        return p
    lo = min(p._val, r._val)
    hi = max(p._val + len(p._c), r._val + len(r._c))
    out = [0] * (hi - lo)
    off = p._val - lo
    for i, c in enumerate(p._c):
        out[off + i] = c
    off = r._val - lo
    for i, c in enumerate(r._c):
        out[off + i] += c
    return _make(lo, out)


def mul(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    if not p._c or not r._c:
        return ZERO
    a, b = p._c, r._c
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        y = b[0]
        return _make(p._val + r._val, [x * y for x in a])
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a, j):
                out[i] += x * y
    return _make(p._val + r._val, out)


def times_q_integer(p: LaurentPoly, n: int) -> LaurentPoly:
    """p * (1 + q + ... + q^(n-1)) for n >= 1, as a sliding-window sum."""
    if n < 1:
        raise ValueError("window length must be positive")
    a = p._c
    if not a:
        return p
    out = []
    run = 0
    m = len(a)
    for i in range(m + n - 1):
        if i < m:
            run += a[i]
        if i >= n:
            run -= a[i - n]
        out.append(run)
    return _make(p._val, out)


def shift(p: LaurentPoly, d: int) -> LaurentPoly:
    """Multiply by q^d."""
    if not p._c or not d:
        return p
    q = LaurentPoly.__new__(LaurentPoly)
    q._val, q._c, q._hash = p._val + d, p._c, None
    return q


def mirror(p: LaurentPoly) -> LaurentPoly:
    """Reverse the coefficient sequence, keeping the degree span."""
    if not p._c:
        raise ValueError("mirror of the zero polynomial is undefined")
    return LaurentPoly.from_dense(p._val, p._c[::-1])


def substitute_inverse(p: LaurentPoly) -> LaurentPoly:
    """q -> q^-1."""
    if not p._c:
        return p
    return LaurentPoly.from_dense(-(p._val + len(p._c) - 1), p._c[::-1])


def is_palindromic(p: LaurentPoly) -> bool:
    return p._c == p._c[::-1]


def is_unimodal(p: LaurentPoly) -> bool:
    c = p._c
    i = 1
    while i < len(c) and c[i] >= c[i - 1]:
        i += 1
    while i < len(c) and c[i] <= c[i - 1]:
        i += 1
    return i >= len(c)


def has_nonnegative_coefficients(p: LaurentPoly) -> bool:
    """True iff p is nonzero and no coefficient is negative."""
    return bool(p._c) and all(c >= 0 for c in p._c)


def has_positive_coefficients(p: LaurentPoly) -> bool:
    """True iff every coefficient over the degree span is > 0."""
    return bool(p._c) and all(c > 0 for c in p._c)


# -- text form -----------------------------------------------------------


def _monomial_text(e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "q"
    return f"q^{e}"


def to_text(p: LaurentPoly) -> str:
    """Canonical text form, ascending exponents: ``-q^-1 + 1 + 2*q^2``."""
    if not p._c:
        return "0"
    parts: list[str] = []
    for e, c in sorted(p.coeffs.items()):
        mono = _monomial_text(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:(\d+)\s*(?:\*\s*)?)?
        (q(?:\s*\^\s*(-?\d+))?)?
        \s*""",
    re.VERBOSE,
)


def parse(text: str) -> LaurentPoly:
    """Inverse of :func:`to_text`; also tolerates ``2q``, spaces and any term order."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial string")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, num, var, exp = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator near {s[pos:]!r}")
        if num is None and var is None:
            raise ValueError(f"dangling sign in {text!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        e = 0 if var is None else (int(exp) if exp is not None else 1)
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(coeffs)
