"""Triangulated annuli glued from a fan, their closed loops, matchings and
dual-graph closures.

An annulus is stored through its universal cover: the strip of fan
triangles, drawn between the inner boundary (top row, ``y = 3``) and the
outer boundary (bottom row, ``y = 0``), repeats with period ``P`` in ``x``.
The strip's left edge is identified with its right edge ``(k+1, k+2)``.

* ``plus``: the whole fan of ``a``; left edge ``(1, 0)``.
* ``minus``: the fan of ``c`` without ``t0``; left edge ``(1, n-1)``.  The
  edges of ``t0`` land on those of ``{k, k+1, k+2}``.

Arcs are triples ``(tail, head, shift)`` where ``shift`` is how many periods
the head lies to the right of the tail.  Parallel arcs and loops at a single
vertex are therefore ordinary data.  The winding number of a closed loop is
the sum of its shifts.

A triangle counts toward the coarea of a loop when the upward vertical ray
from its centroid crosses the lifted loop an odd number of times, that is,
when it lies between the loop and the outer boundary.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from graphlib import TopologicalSorter
from math import lcm
from typing import Iterator, Sequence

from .geometry import Point, centroid, mask_popcount, orient, periodic_crossings
from .laurent import ZERO, LaurentPoly, shift
from .polygon import FanTriangulation, build_fan, path_generating_poly

KINDS = ("plus", "minus")


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    shift: int
    kind: str  # "inner", "outer" or "bridging"
    fan_edge: tuple[int, int]  # the strip edge it comes from, oriented


@dataclass(frozen=True)
class AnnulusTriangulation:
    kind: str
    seq: tuple[int, ...]
    fan: FanTriangulation
    inner: tuple[int, ...]
    outer: tuple[int, ...]
    period: int
    positions: dict[int, Point]  # base point of each annulus vertex in the cover
    strip_positions: dict[int, Point]  # fan vertex -> point in the cover
    gluing: dict[int, int]  # fan vertex -> annulus vertex
    lift: dict[int, int]  # fan vertex -> period offset of its strip copy
    triangles: tuple[tuple[int, int, int], ...]  # annulus vertices, strip order
    strip_triangles: tuple[tuple[int, int, int], ...]  # fan vertices, strip order
    base_down: tuple[bool, ...]
    arcs: tuple[Arc, ...]
    arc_masks: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def triangle_count(self) -> int:
        return len(self.triangles)

    def arc_points(self, arc: Arc) -> tuple[Point, Point]:
        (tx, ty), (hx, hy) = self.positions[arc.tail], self.positions[arc.head]
        return (tx, ty), (hx + arc.shift * self.period, hy)

    def inner_quiddity(self) -> tuple[int, ...]:
        count = Counter(v for t in self.triangles for v in t)
        return tuple(count[v] for v in self.inner)

    def triangle_labels(self) -> list[str]:
        return [_label(i) for i in range(len(self.triangles))]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "seq": list(self.seq),
            "inner": list(self.inner),
            "outer": list(self.outer),
            "period": self.period,
            "positions": {str(v): list(p) for v, p in sorted(self.positions.items())},
            "triangles": [
                {"label": _label(i), "vertices": list(t), "base": "down" if d else "up"}
                for i, (t, d) in enumerate(zip(self.triangles, self.base_down))
            ],
            "arcs": [
                {"tail": x.tail, "head": x.head, "shift": x.shift, "kind": x.kind} for x in self.arcs
            ],
        }


def _label(i: int) -> str:
    return chr(ord("a") + i) if i < 26 else f"t{i}"


def build_annulus(kind: str, seq: Sequence[int]) -> AnnulusTriangulation:
    """T+(a) for ``kind="plus"`` or T-(c) for ``kind="minus"``."""
    seq = tuple(seq)
    if kind == "plus":
        if not seq or len(seq) % 2 or any(x < 1 for x in seq):
            raise ValueError(f"T+ needs an even-length sequence of positive integers, got {seq}")
        fan = build_fan(seq)
        strip = fan.triangles
        left = (1, 0)
        bottom = fan.bottom_row
    elif kind == "minus":
        if not seq or any(x < 2 for x in seq):
            raise ValueError(f"T- needs a nonempty sequence of integers >= 2, got {seq}")
        if all(x == 2 for x in seq):
            raise ValueError(
                f"T-{seq} is degenerate: gluing leaves no marked point on the outer boundary"
            )
        fan = build_fan(c=seq)
        strip = fan.triangles[1:]
        left = (1, fan.n - 1)
        bottom = fan.bottom_row[1:]
    else:
        raise ValueError(f"kind must be 'plus' or 'minus', got {kind!r}")

    k = fan.k
    top = fan.top_row
    gluing = {v: v for v in top[:-1] + bottom[:-1]}
    gluing[k + 1] = 1
    gluing[k + 2] = k + 2
    gluing[left[1]] = k + 2
    lift = {v: 0 for v in gluing}
    lift[k + 1] = lift[k + 2] = 1

    width = 3 * lcm(k, len(bottom) - 1)
    spos: dict[int, Point] = {}
    for i, v in enumerate(top):
        spos[v] = (i * width // k, 3)
    for j, v in enumerate(bottom):
        spos[v] = (j * width // (len(bottom) - 1), 0)
    base = {gluing[v]: p for v, p in spos.items() if lift[v] == 0}

    inner = tuple(range(1, k + 1))
    outer = tuple(sorted({gluing[v] for v in bottom}))
    inner_set = set(inner)

    edges: set[tuple[int, int]] = set()
    for t in strip:
        x, y, z = t.vertices
        edges |= {_key(x, y), _key(y, z), _key(x, z)}
    edges.discard(_key(*left))
    arcs = []
    for e in sorted(edges):
        tail, head = fan.orientation(*e)
        u, w = gluing[tail], gluing[head]
        if u in inner_set and w in inner_set:
            where = "inner"
        elif u in inner_set or w in inner_set:
            where = "bridging"
        else:
            where = "outer"
        arcs.append(Arc(u, w, lift[head] - lift[tail], where, (tail, head)))

    cents = [centroid(*(spos[v] for v in t.vertices)) for t in strip]
    masks = []
    for arc in arcs:
        (tx, ty), (hx, hy) = base[arc.tail], base[arc.head]
        p, q = (tx, ty), (hx + arc.shift * width, hy)
        m = 0
        for i, cpt in enumerate(cents):
            if periodic_crossings(p, q, cpt, width) % 2:
                m |= 1 << i
        masks.append(m)

    A = AnnulusTriangulation(
        kind=kind,
        seq=seq,
        fan=fan,
        inner=inner,
        outer=outer,
        period=width,
        positions=base,
        strip_positions=spos,
        gluing=gluing,
        lift=lift,
        triangles=tuple(tuple(gluing[v] for v in t.vertices) for t in strip),
        strip_triangles=tuple(t.vertices for t in strip),
        base_down=tuple(t.base_down for t in strip),
        arcs=tuple(arcs),
        arc_masks=tuple(masks),
    )
    return A


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


# -- closed loops ----------------------------------------------------------


@dataclass(frozen=True)
class Loop:
    vertices: tuple[int, ...]
    arcs: tuple[int, ...]  # indices into A.arcs
    area: int
    coarea: int
    winding: int
    coarea_mask: int = field(default=0, compare=False, repr=False)

    def statistic(self, name: str) -> int:
        if name not in ("area", "coarea"):
            raise ValueError(f"unknown statistic {name!r}")
        return getattr(self, name)


def simple_cycles(succ: dict[int, Sequence[int]]) -> Iterator[tuple[int, ...]]:
    """Elementary circuits of a digraph (self-loops included), by the
    blocking search of Johnson.  Each cycle starts at its smallest vertex."""
    order = sorted(set(succ) | {w for ws in succ.values() for w in ws})
    for i, s in enumerate(order):
        allowed = set(order[i:])
        blocked: set[int] = set()
        blocked_by: dict[int, set[int]] = defaultdict(set)
        stack: list[int] = []

        def unblock(u: int) -> None:
            todo = [u]
            while todo:
                x = todo.pop()
                if x in blocked:
                    blocked.discard(x)
                    todo.extend(blocked_by.pop(x, ()))

        def circuit(v: int):
            found = False
            stack.append(v)
            blocked.add(v)
            for w in succ.get(v, ()):
                if w not in allowed:
                    continue
                if w == s:
                    yield tuple(stack)
                    found = True
                elif w not in blocked:
                    if (yield from circuit(w)):
                        found = True
            if found:
                unblock(v)
            else:
                for w in succ.get(v, ()):
                    if w in allowed:
                        blocked_by[w].add(v)
            stack.pop()
            return found

        yield from circuit(s)


def enumerate_loops(A: AnnulusTriangulation) -> list[Loop]:
    """Every oriented simple closed loop made of arcs, with area and coarea."""
    between: dict[tuple[int, int], list[int]] = defaultdict(list)
    for i, arc in enumerate(A.arcs):
        between[(arc.tail, arc.head)].append(i)
    succ: dict[int, list[int]] = defaultdict(list)
    for u, w in sorted(between):
        succ[u].append(w)

    total = len(A.triangles)
    loops = []
    for cyc in simple_cycles(succ):
        steps = [between[(cyc[j], cyc[(j + 1) % len(cyc)])] for j in range(len(cyc))]
        for choice in itertools.product(*steps):
            winding = sum(A.arcs[i].shift for i in choice)
            if abs(winding) != 1:
                raise AssertionError(
                    f"loop {cyc} via arcs {choice} winds {winding} times around the inner boundary"
                )
            m = 0
            for i in choice:
                m ^= A.arc_masks[i]
            co = mask_popcount(m)
            loops.append(Loop(cyc, choice, total - co, co, winding, m))
    return loops


def loop_generating_poly(A: AnnulusTriangulation, statistic: str = "coarea") -> LaurentPoly:
    counts = Counter(loop.statistic(statistic) for loop in enumerate_loops(A))
    return LaurentPoly(dict(counts)) if counts else ZERO


def loop_poly_via_paths(A: AnnulusTriangulation) -> LaurentPoly:
    """Loops through inner vertex 1 correspond to fan paths k+1 -> 1 (with
    one extra triangle of coarea), the others to paths k+2 -> 0."""
    if A.kind != "plus":
        raise ValueError("the path decomposition is only available for T+")
    T, k = A.fan, A.fan.k
    return shift(path_generating_poly(T, k + 1, 1, "coarea"), 1) + path_generating_poly(
        T, k + 2, 0, "coarea"
    )


# -- matchings ---------------------------------------------------------------


def list_matchings(A: AnnulusTriangulation) -> list[tuple[str, ...]]:
    """Tuples (t_1, ..., t_k) of distinct triangles, t_i incident to inner vertex i.

    Incidence is counted per corner.  This only matters for k = 1, where a
    triangle can meet the single inner vertex at two corners; such choices
    are listed as ``b.1`` and ``b.2``.
    """
    if A.kind != "minus":
        raise ValueError("matchings are defined on T- annuli")
    labels = A.triangle_labels()
    options: list[list[tuple[int, str]]] = []
    for i in A.inner:
        opts = []
        for j, t in enumerate(A.triangles):
            hits = t.count(i)
            if hits == 1:
                opts.append((j, labels[j]))
            else:
                opts.extend((j, f"{labels[j]}.{h}") for h in range(1, hits + 1))
        options.append(opts)
    out: list[tuple[str, ...]] = []
    used: list[int] = []
    names: list[str] = []

    def extend(pos: int) -> None:
        if pos == len(options):
            out.append(tuple(names))
            return
        for j, name in options[pos]:
            if j not in used:
                used.append(j)
                names.append(name)
                extend(pos + 1)
                used.pop()
                names.pop()

    extend(0)
    return out


def count_matchings(A: AnnulusTriangulation) -> int:
    return len(list_matchings(A))


# -- dual graph and closures -------------------------------------------------


def dual_edges(A: AnnulusTriangulation) -> list[tuple[int, int]]:
    """Oriented edges of the cyclic dual graph.

    Consecutive strip triangles share one arc; the dual edge crosses it from
    the triangle on the arc's left to the one on its right.
    """
    T = A.fan
    spos = A.strip_positions
    tris = A.strip_triangles
    P = A.period
    m = len(tris)
    out = []
    for i in range(m):
        j = (i + 1) % m
        if j:
            shared = set(tris[i]) & set(tris[j])
            if len(shared) != 2:
                raise AssertionError("consecutive strip triangles must share an edge")
            tail, head = T.orientation(*sorted(shared))
            ci = centroid(*(spos[v] for v in tris[i]))
            cj = centroid(*(spos[v] for v in tris[j]))
        else:
            tail, head = T.k + 1, T.k + 2  # the glued edge, seen on the right end
            ci = centroid(*(spos[v] for v in tris[i]))
            cx, cy = centroid(*(spos[v] for v in tris[0]))
            cj = (cx + P, cy)
        si = orient(spos[tail], spos[head], ci)
        sj = orient(spos[tail], spos[head], cj)
        if si == sj or 0 in (si, sj):
            raise AssertionError("dual edge does not cross its arc")
        out.append((i, j) if si > 0 else (j, i))
    return out


def list_closures(A: AnnulusTriangulation) -> list[frozenset[int]]:
    """Node sets of the dual graph closed under taking predecessors."""
    if A.kind != "plus":
        raise ValueError("closures are computed on T+ annuli")
    m = len(A.triangles)
    preds: list[set[int]] = [set() for _ in range(m)]
    for u, w in dual_edges(A):
        preds[w].add(u)
    order = _topological(m, preds)
    out: list[frozenset[int]] = []

    def grow(pos: int, chosen: frozenset[int]) -> None:
        if pos == m:
            out.append(chosen)
            return
        v = order[pos]
        grow(pos + 1, chosen)
        if preds[v] <= chosen:
            grow(pos + 1, chosen | {v})

    grow(0, frozenset())
    return out


def _topological(m: int, preds: list[set[int]]) -> list[int]:
    return list(TopologicalSorter({v: preds[v] for v in range(m)}).static_order())


def closure_generating_poly(A: AnnulusTriangulation) -> LaurentPoly:
    counts = Counter(len(C) for C in list_closures(A))
    return LaurentPoly(dict(counts))


# -- structure comparison ------------------------------------------------------


def structure_signature(A: AnnulusTriangulation) -> tuple:
    """Labelled data that determines the annulus: boundaries, arcs, triangles."""
    arcs = sorted((x.tail, x.head, x.shift) for x in A.arcs)
    tris = sorted(tuple(sorted(t)) for t in A.triangles)
    return (A.inner, A.outer, tuple(arcs), tuple(tris))


def same_annulus(A: AnnulusTriangulation, B: AnnulusTriangulation) -> bool:
    return structure_signature(A) == structure_signature(B)
