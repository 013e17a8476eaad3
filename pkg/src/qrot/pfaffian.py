"""The two 2k x 2k block matrices whose determinants involve the squared
q-rotundus, and a division-free determinant over Laurent polynomials.

The skew matrix satisfies ``det = R(c)^2``.  For the symmetric one,
``(-1)^k det = R(c)^2 - 4 q^(sum(c_i - 1))`` is only conjectured, so
:func:`conjecture_report` records the outcome per tuple instead of
asserting it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .laurent import ONE, ZERO, LaurentPoly
from .qcore import q_integer, rotundus_minus

DEFAULT_DIM_CAP = 14
CONFIRMED = "CONJECTURE-CONFIRMED"
REFUTED = "CONJECTURE-REFUTED"


@dataclass(frozen=True)
class SquareMatrix:
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        d = len(self.entries)
        if d < 1 or any(len(row) != d for row in self.entries):
            raise ValueError("matrix must be square with dimension >= 1")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> SquareMatrix:
        return cls(tuple(tuple(_as_poly(x) for x in row) for row in rows))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> SquareMatrix:
        return SquareMatrix(tuple(zip(*self.entries)))

    def is_skew_symmetric(self) -> bool:
        d = self.dim
        return all(self[i, j] == -self[j, i] for i in range(d) for j in range(i, d))

    def is_symmetric(self) -> bool:
        d = self.dim
        return all(self[i, j] == self[j, i] for i in range(d) for j in range(i + 1, d))

    def at_one(self) -> list[list[int]]:
        return [[x.at_one() for x in row] for row in self.entries]

    def to_json(self) -> list[list[dict]]:
        return [[x.to_json() for x in row] for row in self.entries]


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"matrix entries must be LaurentPoly or int, got {type(x).__name__}")


def _block_matrix(c: Sequence[int], sign: int) -> SquareMatrix:
    c = tuple(c)
    k = len(c)
    if k < 2:
        raise ValueError(f"need k >= 2, got {c}")
    if any(x < 1 for x in c):
        raise ValueError(f"entries must be positive, got {c}")
    d = 2 * k
    m = [[ZERO] * d for _ in range(d)]
    m[0][k - 1] = ONE
    m[k - 1][0] = LaurentPoly.constant(sign)
    up = [[ZERO] * k for _ in range(k)]
    for i in range(k):
        up[i][i] = q_integer(c[i])
        if i + 1 < k:
            up[i][i + 1] = ONE
            up[i + 1][i] = LaurentPoly.monomial(c[i] - 1)
    for i in range(k):
        for j in range(k):
            m[i][k + j] = up[i][j]
            m[k + j][i] = up[i][j] if sign > 0 else -up[i][j]
    corner = LaurentPoly.monomial(c[-1] - 1)
    m[k][d - 1] = corner
    m[d - 1][k] = corner if sign > 0 else -corner
    return SquareMatrix.from_rows(m)


def build_skew(c: Sequence[int]) -> SquareMatrix:
    M = _block_matrix(c, -1)
    if not M.is_skew_symmetric():  # pragma: no cover
        raise AssertionError("skew matrix is not skew-symmetric")
    return M


def build_sym(c: Sequence[int]) -> SquareMatrix:
    M = _block_matrix(c, 1)
    if not M.is_symmetric():  # pragma: no cover
        raise AssertionError("symmetric matrix is not symmetric")
    return M


def dimension_cap() -> int:
    raw = os.environ.get("QROT_DIM_CAP")
    if raw is None:
        return DEFAULT_DIM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"QROT_DIM_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("QROT_DIM_CAP must be positive")
    return cap


def determinant(M: SquareMatrix) -> LaurentPoly:
    """Determinant by Berkowitz's algorithm: ring operations only."""
    n = M.dim
    cap = dimension_cap()
    if n > cap:
        raise ValueError(f"dimension {n} exceeds the cap {cap} (set QROT_DIM_CAP to raise it)")
    A = M.entries
    poly: list[LaurentPoly] = [ONE]
    for r in range(n):
        row = A[r][:r]
        col = [A[i][r] for i in range(r)]
        toeplitz = [ONE, -A[r][r]]
        v = col
        for _ in range(r):
            toeplitz.append(-_dot(row, v))
            v = [_dot(A[i][:r], v) for i in range(r)]
        nxt = []
        for i in range(r + 2):
            acc = ZERO
            for j in range(max(0, i - len(toeplitz) + 1), min(i, r) + 1):
                acc = acc + toeplitz[i - j] * poly[j]
            nxt.append(acc)
        poly = nxt
    return poly[n] if n % 2 == 0 else -poly[n]


def _dot(xs: Sequence[LaurentPoly], ys: Sequence[LaurentPoly]) -> LaurentPoly:
    acc = ZERO
    for x, y in zip(xs, ys):
        if x and y:
            acc = acc + x * y
    return acc


def cofactor_determinant(M: SquareMatrix) -> LaurentPoly:
    """Laplace expansion along the first row; exponential, for small checks."""

    def det(rows: tuple[int, ...], cols: tuple[int, ...]) -> LaurentPoly:
        if not rows:
            return ONE
        r, rest = rows[0], rows[1:]
        acc = ZERO
        for idx, cidx in enumerate(cols):
            x = M.entries[r][cidx]
            if x:
                term = x * det(rest, cols[:idx] + cols[idx + 1 :])
                acc = acc + (term if idx % 2 == 0 else -term)
        return acc

    idx = tuple(range(M.dim))
    return det(idx, idx)


def skew_identity_holds(c: Sequence[int]) -> bool:
    return determinant(build_skew(c)) == rotundus_minus(c) ** 2


def conjecture_case(c: Sequence[int]) -> dict:
    """One report line for the symmetric identity."""
    c = tuple(c)
    lhs = determinant(build_sym(c))
    if len(c) % 2:
        lhs = -lhs
    rhs = rotundus_minus(c) ** 2 - LaurentPoly.monomial(sum(x - 1 for x in c), 4)
    return {
        "c": list(c),
        "status": CONFIRMED if lhs == rhs else REFUTED,
        "lhs": lhs.to_json(),
        "rhs": rhs.to_json(),
    }


def conjecture_report(tuples: Iterable[Sequence[int]]) -> Iterator[dict]:
    for c in tuples:
        yield conjecture_case(c)
