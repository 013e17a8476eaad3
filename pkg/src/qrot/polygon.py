"""Fan triangulations of a polygon, oriented paths, and their statistics.

For a regular sequence ``a = (a1, ..., a2m)`` the polygon has
``n = sum(a) + 2`` vertices.  The top row holds ``1, 2, ..., k+1`` and the
bottom row holds ``0, n-1, n-2, ..., k+2``, both left to right, where
``k = a2 + a4 + ...``.  Triangles form a strip: ``a1`` base-down triangles
(the first one, ``t0 = {0, n-1, 1}``, is the leftmost), then ``a2`` base-up,
and so on.

Each vertex also carries a Farey label.  ``0``, ``1`` and ``n-1`` are
``0/1``, ``1/0`` and ``1/1``; every later vertex is the mediant of the edge
it is attached to, which fixes the edge weights and orientations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from math import lcm
from typing import Sequence

from .farey import (
    INF_NODE,
    ONE_NODE,
    ZERO_NODE,
    FareyNode,
    Rational,
    evaluate_regular,
    hirzebruch_convert,
    regular_from_negative,
)
from .geometry import Point, centroid, inside_even_odd
from .laurent import ZERO, LaurentPoly, shift

STATISTICS = ("coarea", "area", "weight")


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class StripTriangle:
    vertices: tuple[int, int, int]
    base_down: bool
    new_vertex: int
    shared_edge: tuple[int, int] | None  # edge shared with the previous triangle


@dataclass(frozen=True)
class FanTriangulation:
    a_seq: tuple[int, ...]
    c_seq: tuple[int, ...]
    n: int
    k: int
    top_row: tuple[int, ...]
    bottom_row: tuple[int, ...]
    positions: dict[int, Point]
    triangles: tuple[StripTriangle, ...]
    farey: dict[int, FareyNode]
    oriented_edges: frozenset[tuple[int, int]]
    weight_exponent: dict[tuple[int, int], int]
    left_parent: dict[int, int]
    right_parent: dict[int, int]
    _out: dict[int, tuple[int, ...]] = field(repr=False, compare=False)
    _centroids: tuple[Point, ...] = field(repr=False, compare=False)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.weight_exponent) + [(0, 1)]

    def successors(self, v: int) -> tuple[int, ...]:
        return self._out.get(v, ())

    def orientation(self, u: int, v: int) -> tuple[int, int] | None:
        """The directed version of edge u--v, or None for the leftmost edge."""
        if (u, v) in self.oriented_edges:
            return (u, v)
        if (v, u) in self.oriented_edges:
            return (v, u)
        if _edge(u, v) == (0, 1):
            return None
        raise KeyError(f"{u}--{v} is not an edge")

    def quiddity(self) -> tuple[int, ...]:
        count = Counter(v for t in self.triangles for v in t.vertices)
        return tuple(count[v] for v in range(self.n))

    def rational(self) -> Rational:
        node = self.farey[self.k + 1]
        return Rational(node.r, node.s)

    def to_json(self) -> dict:
        return {
            "a": list(self.a_seq),
            "c": list(self.c_seq),
            "n": self.n,
            "k": self.k,
            "vertices": [
                {
                    "id": v,
                    "x": self.positions[v][0],
                    "y": self.positions[v][1],
                    "farey": f"{self.farey[v].r}/{self.farey[v].s}",
                }
                for v in range(self.n)
            ],
            "triangles": [
                {"vertices": list(t.vertices), "base": "down" if t.base_down else "up"}
                for t in self.triangles
            ],
            "edges": [
                {"tail": u, "head": v, "weight": self.weight_exponent[_edge(u, v)]}
                for u, v in sorted(self.oriented_edges)
            ]
            + [{"tail": None, "head": None, "ends": [0, 1], "weight": None}],
        }


def _mediant(L: FareyNode, R: FareyNode, d: int) -> FareyNode:
    return FareyNode(L.r + R.r, L.s + R.s, L.num + shift(R.num, d), L.den + shift(R.den, d))


def _less(x: FareyNode, y: FareyNode) -> bool:
    return x.r * y.s < y.r * x.s


def build_fan(a: Sequence[int] | None = None, *, c: Sequence[int] | None = None) -> FanTriangulation:
    """Fan triangulation from a regular sequence ``a`` or a negative sequence ``c``."""
    if (a is None) == (c is None):
        raise ValueError("give exactly one of a or c")
    if a is None:
        c = tuple(c)
        if not c:
            raise ValueError("empty sequence")
        a = regular_from_negative(c)
    a = tuple(a)
    if not a:
        raise ValueError("empty sequence")
    c = hirzebruch_convert(a)
    n = sum(a) + 2
    k = sum(a[1::2])
    top = tuple(range(1, k + 2))
    bottom = (0,) + tuple(range(n - 1, k + 1, -1))

    # strip layout; coordinates are multiples of 3 so centroids are integral
    wide = 3 * lcm(k, len(bottom) - 1)
    pos: dict[int, Point] = {}
    for i, v in enumerate(top):
        pos[v] = (i * wide // k, 3)
    for j, v in enumerate(bottom):
        pos[v] = (j * wide // (len(bottom) - 1), 0)

    kinds: list[bool] = []
    for i, x in enumerate(a):
        kinds.extend([i % 2 == 0] * x)
    tris = [StripTriangle((0, n - 1, 1), True, n - 1, None)]
    ti, bi = 0, 1
    for down in kinds[1:]:
        shared = (top[ti], bottom[bi])
        if down:
            bi += 1
            new = bottom[bi]
        else:
            ti += 1
            new = top[ti]
        tris.append(StripTriangle((shared[1], shared[0], new), down, new, _edge(*shared)))
    assert ti == k and bi == len(bottom) - 1

    # replay the weighted mediant rule along the strip
    farey = {0: ZERO_NODE, 1: INF_NODE, n - 1: ONE_NODE}
    weights = {_edge(0, n - 1): 0, _edge(n - 1, 1): 0}
    oriented = {(n - 1, 0), (n - 1, 1)}
    left_parent = {n - 1: 0}
    right_parent = {n - 1: 1}
    for t in tris[1:]:
        u, v = t.shared_edge
        L, R = (u, v) if _less(farey[u], farey[v]) else (v, u)
        d = weights[_edge(L, R)] + 1
        M = t.new_vertex
        farey[M] = _mediant(farey[L], farey[R], d)
        weights[_edge(L, M)] = 0
        weights[_edge(M, R)] = d
        oriented |= {(M, L), (M, R)}
        left_parent[M] = L
        right_parent[M] = R

    x = evaluate_regular(a)
    if Fraction(farey[k + 1].r, farey[k + 1].s) != x:
        raise AssertionError("strip replay does not end at the expected rational")

    out: dict[int, list[int]] = {}
    for u, v in sorted(oriented):
        out.setdefault(u, []).append(v)
    fan = FanTriangulation(
        a_seq=a,
        c_seq=c,
        n=n,
        k=k,
        top_row=top,
        bottom_row=bottom,
        positions=pos,
        triangles=tuple(tris),
        farey=farey,
        oriented_edges=frozenset(oriented),
        weight_exponent=weights,
        left_parent=left_parent,
        right_parent=right_parent,
        _out={u: tuple(vs) for u, vs in out.items()},
        _centroids=tuple(centroid(*(pos[v] for v in t.vertices)) for t in tris),
    )
    _check_invariants(fan)
    return fan


def geometric_orientation(T: FanTriangulation, u: int, v: int) -> tuple[int, int] | None:
    """Orientation of edge u--v read off the strip picture alone.

    Row edges point left, the rightmost edge points down, the leftmost edge
    has none.  An interior edge points up when the triangle on its left is
    base-down, and down when that triangle is base-up.
    """
    e = _edge(u, v)
    if e == (0, 1):
        return None
    top = set(T.top_row)
    rows = [T.top_row, T.bottom_row]
    for row in rows:
        for left, right in zip(row, row[1:]):
            if _edge(left, right) == e:
                return (right, left)
    if e == _edge(T.k + 1, T.k + 2):
        return (T.k + 1, T.k + 2)
    # interior edge: the triangle to its left is the one earlier in the strip
    for i, t in enumerate(T.triangles[1:], start=1):
        if t.shared_edge == e:
            hi, lo = (u, v) if u in top else (v, u)
            return (lo, hi) if T.triangles[i - 1].base_down else (hi, lo)
    raise KeyError(f"{u}--{v} is not an edge")


def _check_invariants(T: FanTriangulation) -> None:
    q = T.quiddity()
    if q[0] != 1 or q[T.k + 1] != 1 or tuple(q[1 : T.k + 1]) != T.c_seq:
        raise AssertionError(f"quiddity {q} does not match c = {T.c_seq}")
    if T.n != sum(x - 1 for x in T.c_seq) + 3:
        raise AssertionError("vertex count mismatch")
    for u, v in T.oriented_edges:
        if geometric_orientation(T, u, v) != (u, v):
            raise AssertionError(f"orientation of {u}--{v} disagrees with the strip rules")
    ts = TopologicalSorter({v: T.successors(v) for v in T.vertices})
    try:
        tuple(ts.static_order())
    except CycleError as exc:  # pragma: no cover - would be a construction bug
        raise AssertionError("oriented edges contain a cycle") from exc


# -- paths ---------------------------------------------------------------


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]
    coarea: int
    area: int
    weight: int
    coarea_triangles: frozenset[int] = field(default=frozenset(), compare=False, repr=False)

    def statistic(self, name: str) -> int:
        if name not in STATISTICS:
            raise ValueError(f"unknown statistic {name!r}")
        return getattr(self, name)


def left_reference(T: FanTriangulation, v: int) -> list[int]:
    """Walk from v to 1 hugging the bottom: left parents down to 1/1, then 1."""
    return _reference(T, v, T.left_parent, stop=T.n - 1)


def right_reference(T: FanTriangulation, v: int) -> list[int]:
    """Walk from v to 1 hugging the top via right parents."""
    return _reference(T, v, T.right_parent, stop=1)


def _reference(T: FanTriangulation, v: int, parent: dict[int, int], stop: int) -> list[int]:
    if v == 1:
        return [1]
    if v == 0:
        return [0, 1]
    walk = [v]
    while walk[-1] != stop:
        walk.append(parent[walk[-1]])
    if walk[-1] != 1:
        walk.append(1)
    return walk


def _enclosed(T: FanTriangulation, path: Sequence[int], ref_start: list[int], ref_end: list[int]) -> frozenset[int]:
    walk = list(path) + ref_end[1:] + list(reversed(ref_start))[1:-1]
    poly = [T.positions[v] for v in walk]
    # t0 (index 0) is never counted
    return frozenset(i for i, c in enumerate(T._centroids) if i and inside_even_odd(poly, c))


def _make_path(T: FanTriangulation, verts: tuple[int, ...]) -> Path:
    s, e = verts[0], verts[-1]
    below = _enclosed(T, verts, left_reference(T, s), left_reference(T, e))
    above = _enclosed(T, verts, right_reference(T, s), right_reference(T, e))
    weight = sum(T.weight_exponent[_edge(u, v)] for u, v in zip(verts, verts[1:]))
    return Path(verts, len(below), len(above), weight, below)


def _check_vertex(T: FanTriangulation, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < T.n:
        raise ValueError(f"vertex {v!r} is not in 0..{T.n - 1}")


def enumerate_paths(T: FanTriangulation, source: int, target: int) -> list[Path]:
    """All oriented paths from ``source`` to ``target``, depth first."""
    _check_vertex(T, source)
    _check_vertex(T, target)
    found: list[tuple[int, ...]] = []
    stack = [source]

    def dfs(v: int) -> None:
        if v == target:
            found.append(tuple(stack))
            return
        for w in T.successors(v):
            stack.append(w)
            dfs(w)
            stack.pop()

    dfs(source)
    return [_make_path(T, p) for p in found]


def path_generating_poly(T: FanTriangulation, source: int, target: int, statistic: str = "coarea") -> LaurentPoly:
    if statistic not in STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}")
    counts = Counter(p.statistic(statistic) for p in enumerate_paths(T, source, target))
    if not counts:
        return ZERO
    return LaurentPoly(dict(counts))
