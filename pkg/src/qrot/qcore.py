"""q-integers, q-continuants, the 2x2 matrix products and q-rotundi.

Regular sequences ``a = (a1, ..., a2m)`` and negative (Hirzebruch-Jung)
sequences ``c = (c1, ..., ck)`` are plain tuples of ints.  Everything is
computed in the ring of Laurent polynomials; no fractions are formed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import accumulate
from typing import Sequence

from .laurent import ONE, ZERO, LaurentPoly, shift, times_q_integer

EULER_MINDING_MAX_K = 20


def q_integer(n: int) -> LaurentPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0; [-n]_q = -q^-1 - ... - q^-n."""
    if n > 0:
        return LaurentPoly.from_dense(0, [1] * n)
    if n == 0:
        return ZERO
    return LaurentPoly.from_dense(n, [-1] * -n)


def q_integer_inv(n: int) -> LaurentPoly:
    """[n]_{q^-1}, the q-integer with q replaced by q^-1."""
    if n > 0:
        return LaurentPoly.from_dense(1 - n, [1] * n)
    if n == 0:
        return ZERO
    return LaurentPoly.from_dense(1, [-1] * -n)


@dataclass(frozen=True)
class Mat2:
    a11: LaurentPoly
    a12: LaurentPoly
    a21: LaurentPoly
    a22: LaurentPoly

    def __matmul__(self, o: Mat2) -> Mat2:
        return Mat2(
            self.a11 * o.a11 + self.a12 * o.a21,
            self.a11 * o.a12 + self.a12 * o.a22,
            self.a21 * o.a11 + self.a22 * o.a21,
            self.a21 * o.a12 + self.a22 * o.a22,
        )

    def scale(self, s: LaurentPoly) -> Mat2:
        return Mat2(s * self.a11, s * self.a12, s * self.a21, s * self.a22)

    def trace(self) -> LaurentPoly:
        return self.a11 + self.a22

    def det(self) -> LaurentPoly:
        return self.a11 * self.a22 - self.a12 * self.a21

    def rows(self) -> tuple[tuple[LaurentPoly, LaurentPoly], tuple[LaurentPoly, LaurentPoly]]:
        return ((self.a11, self.a12), (self.a21, self.a22))

    def to_json(self) -> list[list[dict]]:
        return [[e.to_json() for e in row] for row in self.rows()]

    @classmethod
    def from_json(cls, obj) -> Mat2:
        (a, b), (c, d) = obj
        return cls(*(LaurentPoly.from_json(x) for x in (a, b, c, d)))


IDENTITY = Mat2(ONE, ZERO, ZERO, ONE)
# Elementary factor relating the two matrix products: M+(a) = M(c) R_q.
R_Q = Mat2(LaurentPoly.monomial(1), ONE, ZERO, ONE)


def _check_even(a: Sequence[int], allow_empty: bool = False) -> None:
    if len(a) % 2 or (not a and not allow_empty):
        raise ValueError(f"regular sequence must have even length >= 2, got {tuple(a)}")


def mat_plus(a: Sequence[int]) -> Mat2:
    """M+(a1,...,a2m)_q = q^(a2+a4+...) * prod of the alternating elementary factors."""
    _check_even(a)
    if any(x < 1 for x in a):
        raise ValueError(f"regular coefficients must be >= 1, got {tuple(a)}")
    factors = []
    for i, x in enumerate(a):
        if i % 2 == 0:
            factors.append(Mat2(q_integer(x), LaurentPoly.monomial(x), ONE, ZERO))
        else:
            factors.append(Mat2(q_integer_inv(x), LaurentPoly.monomial(-x), ONE, ZERO))
    prod = reduce(Mat2.__matmul__, factors)
    return prod.scale(LaurentPoly.monomial(sum(a[1::2])))


def mat_minus(c: Sequence[int]) -> Mat2:
    """M(c1,...,ck)_q = prod of ([ci]_q, -q^(ci-1); 1, 0)."""
    if not c:
        raise ValueError("negative sequence must be nonempty")
    factors = [Mat2(q_integer(x), LaurentPoly.monomial(x - 1, -1), ONE, ZERO) for x in c]
    return reduce(Mat2.__matmul__, factors)


def continuant_K(a: Sequence[int], *, via: str = "matrix") -> LaurentPoly:
    """K_2m(a)_q.

    ``via="matrix"`` reads it off the top-left entry of :func:`mat_plus`;
    ``via="determinant"`` expands the tridiagonal determinant with mixed
    [a_i]_q / [a_i]_{q^-1} entries, kept as a cross-check.
    """
    _check_even(a, allow_empty=True)
    if not a:
        return ONE
    if via == "matrix":
        return shift(mat_plus(a).a11, -1)
    if via == "determinant":
        return shift(_tridiagonal_K(a), sum(a[1::2]) - 1)
    raise ValueError(f"unknown method {via!r}")


def _tridiagonal_K(a: Sequence[int]) -> LaurentPoly:
    # Diagonal [a_odd]_q / [a_even]_{q^-1}, superdiagonal q^(+-a_i), subdiagonal -1.
    diag = [q_integer(x) if i % 2 == 0 else q_integer_inv(x) for i, x in enumerate(a)]
    sup = [LaurentPoly.monomial(x if i % 2 == 0 else -x) for i, x in enumerate(a)]
    prev, cur = ONE, diag[0]
    for j in range(1, len(a)):
        prev, cur = cur, diag[j] * cur + sup[j - 1] * prev
    return cur


def continuant_E(c: Sequence[int]) -> LaurentPoly:
    """E_k(c)_q via E_j = [c_j] E_{j-1} - q^(c_{j-1}-1) E_{j-2}."""
    prev, cur = ZERO, ONE
    for j, x in enumerate(c):
        nxt = times_q_integer(cur, x)
        if j > 0:
            nxt = nxt - shift(prev, c[j - 1] - 1)
        prev, cur = cur, nxt
    return cur


def rotundus_plus(a: Sequence[int]) -> LaurentPoly:
    return mat_plus(a).trace()


def rotundus_minus(c: Sequence[int]) -> LaurentPoly:
    return mat_minus(c).trace()


def qcf_regular(a: Sequence[int]) -> tuple[LaurentPoly, LaurentPoly]:
    """Numerator K_2m(a)_q and denominator K_2m-1(a2..a2m)_q of [a1,...,a2m]_q."""
    m = mat_plus(a)
    return shift(m.a11, -1), shift(m.a21, -1)


def qcf_negative(c: Sequence[int]) -> tuple[LaurentPoly, LaurentPoly]:
    """Numerator E_k(c)_q and denominator E_k-1(c2..ck)_q of [[c1,...,ck]]_q."""
    if not c:
        raise ValueError("negative sequence must be nonempty")
    return continuant_E(c), continuant_E(c[1:])


def convergents_plus(a: Sequence[int]) -> tuple[LaurentPoly, LaurentPoly]:
    """Mirror continuants in the second column of M+(a):
    (K~_2m-1(a1..a2m-1)_q, K~_2m-2(a2..a2m-1)_q)."""
    m = mat_plus(a)
    return m.a12, m.a22


def _window(a: list[int], n: int) -> list[int]:
    # coefficients of a(q) * [n]_q
    pre = [0, *accumulate(a)]
    m = len(a)
    return [pre[min(i + 1, m)] - pre[max(0, i - n + 1)] for i in range(m + n - 1)]


def _pair_expansion(c: Sequence[int], lo: int, hi: int, val: int, sign: int, acc: list[int], total: list[int]) -> None:
    # Walk positions lo..hi-1: keep [c_j]_q, or remove the pair (j, j+1) for -q^(c_j - 1).
    # Each leaf is one term sign * q^val * acc; prefixes are shared between terms.
    if lo >= hi:
        for i, x in enumerate(acc, val):
            total[i] += sign * x
        return
    _pair_expansion(c, lo + 1, hi, val, sign, _window(acc, c[lo]), total)
    if lo + 1 < hi:
        _pair_expansion(c, lo + 2, hi, val + c[lo] - 1, -sign, acc, total)


def _euler_minding(c: Sequence[int], cyclic: bool) -> LaurentPoly:
    k = len(c)
    if k > EULER_MINDING_MAX_K:
        raise ValueError(f"Euler-Minding expansion limited to k <= {EULER_MINDING_MAX_K}")
    if any(x < 1 for x in c):
        raise ValueError(f"entries must be positive, got {tuple(c)}")
    # every term has exponents inside [0, sum(c_i - 1)]
    total = [0] * (sum(x - 1 for x in c) + 1)
    _pair_expansion(c, 0, k, 0, 1, [1], total)
    if cyclic:
        # sets containing the wrap-around pair (k, 1)
        _pair_expansion(c, 1, k - 1, c[-1] - 1, -1, [1], total)
    return LaurentPoly.from_dense(0, total)


def euler_minding_E(c: Sequence[int]) -> LaurentPoly:
    """E_k(c)_q as the sum over sets of disjoint adjacent pairs removed from
    [c1]_q...[ck]_q, each removed pair (i, i+1) replaced by -q^(c_i - 1)."""
    return _euler_minding(c, cyclic=False)


def euler_minding_R(c: Sequence[int]) -> LaurentPoly:
    """Cyclic variant giving R_k(c)_q; the wrap-around pair (k, 1) contributes -q^(c_k - 1)."""
    if len(c) < 3:
        raise ValueError("cyclic Euler-Minding needs k >= 3")
    return _euler_minding(c, cyclic=True)


# -- classical (q = 1) integer oracles -------------------------------------


def classical_K(a: Sequence[int]) -> int:
    """Integer continuant of ContEq by expanding the tridiagonal determinant."""
    prev, cur = 0, 1
    for x in a:
        prev, cur = cur, x * cur + prev
    return cur


def classical_E(c: Sequence[int]) -> int:
    prev, cur = 0, 1
    for x in c:
        prev, cur = cur, x * cur - prev
    return cur


def classical_rotundus_plus(a: Sequence[int]) -> int:
    return classical_K(a) + classical_K(a[1:-1])


def classical_rotundus_minus(c: Sequence[int]) -> int:
    return classical_E(c) - (classical_E(c[1:-1]) if len(c) >= 2 else 0)
