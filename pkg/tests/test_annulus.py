import dataclasses
import itertools
import math
from collections import Counter

import networkx as nx
import pytest
from shapely.geometry import Point, Polygon

from qrot.annulus import (
    build_annulus,
    closure_generating_poly,
    count_matchings,
    dual_edges,
    enumerate_loops,
    list_closures,
    list_matchings,
    loop_generating_poly,
    loop_poly_via_paths,
    same_annulus,
    simple_cycles,
    structure_signature,
)
from qrot.farey import hirzebruch_convert
from qrot.laurent import parse
from qrot.qcore import classical_rotundus_minus, rotundus_minus, rotundus_plus
from qrot.verify import regular_sequences

R_PLUS_1211 = parse("1 + 2*q + 2*q^2 + 2*q^3 + 2*q^4 + q^5")
R_MINUS_223 = parse("1 + q + q^2 + q^3 + q^4")


def test_minus_223_structure():
    A = build_annulus("minus", (2, 2, 3))
    assert A.inner == (1, 2, 3) and A.outer == (5,)
    assert A.triangle_count == 4
    assert A.inner_quiddity() == (2, 2, 3)
    assert A.triangle_labels() == ["a", "b", "c", "d"]
    assert sorted((x.tail, x.head, x.kind) for x in A.arcs) == sorted(
        [(2, 1, "inner"), (3, 2, "inner"), (1, 3, "inner"), (5, 5, "outer"),
         (1, 5, "bridging"), (2, 5, "bridging"), (3, 5, "bridging"), (5, 3, "bridging")]
    )


def test_plus_1211_structure():
    A = build_annulus("plus", (1, 2, 1, 1))
    assert A.triangle_count == 5
    assert A.inner == (1, 2, 3) and A.outer == (5, 6)
    assert A.inner_quiddity() == (3, 2, 3)


def test_loop_counts_and_polynomials():
    A = build_annulus("plus", (1, 2, 1, 1))
    assert len(enumerate_loops(A)) == 10
    assert loop_generating_poly(A, "area") == loop_generating_poly(A, "coarea") == R_PLUS_1211
    B = build_annulus("minus", (2, 2, 3))
    loops = enumerate_loops(B)
    assert len(loops) == 5
    assert sorted(l.coarea for l in loops) == [0, 1, 2, 3, 4]
    assert loop_generating_poly(B, "area") == R_MINUS_223


def test_smallest_minus_and_degenerate_cases():
    A = build_annulus("minus", (3,))
    assert loop_generating_poly(A) == parse("1 + q + q^2")
    assert count_matchings(A) == 3
    for c in [(2,), (2, 2), (2, 2, 2)]:
        with pytest.raises(ValueError, match="degenerate"):
            build_annulus("minus", c)


@pytest.mark.parametrize("kind,seq", [("plus", (1, 2, 3)), ("plus", ()), ("plus", (0, 1)), ("minus", (1, 3)), ("cylinder", (1, 1))])
def test_rejects_bad_input(kind, seq):
    with pytest.raises(ValueError):
        build_annulus(kind, seq)


def test_contractible_loop_is_reported():
    A = build_annulus("minus", (2, 2, 3))
    flat = dataclasses.replace(A, arcs=tuple(dataclasses.replace(x, shift=0) for x in A.arcs))
    with pytest.raises(AssertionError, match="winds 0 times"):
        enumerate_loops(flat)


def test_paths_decomposition():
    A = build_annulus("plus", (1, 2, 1, 1))
    assert loop_poly_via_paths(A) == R_PLUS_1211
    assert loop_poly_via_paths(build_annulus("plus", (1, 1))) == parse("1 + q + q^2")
    with pytest.raises(ValueError):
        loop_poly_via_paths(build_annulus("minus", (2, 2, 3)))


def test_matchings_table():
    A = build_annulus("minus", (2, 2, 3))
    assert set(list_matchings(A)) == {
        ("a", "b", "c"), ("a", "b", "d"), ("d", "a", "b"), ("d", "a", "c"), ("d", "b", "c")
    }
    assert count_matchings(A) == rotundus_minus((2, 2, 3)).at_one() == 5
    with pytest.raises(ValueError):
        count_matchings(build_annulus("plus", (1, 1)))


@pytest.mark.parametrize(
    "c", [(3, 2, 4, 2, 2, 5), (2, 3), (4, 4, 4), (5, 2, 2, 2, 3, 2), (2, 2, 2, 2, 2, 3), (6, 2)]
)
def test_matching_count_is_classical_rotundus(c):
    assert count_matchings(build_annulus("minus", c)) == classical_rotundus_minus(c)


def test_closures_small():
    A = build_annulus("plus", (1, 1))
    assert dual_edges(A) == [(0, 1), (0, 1)]
    assert sorted(map(sorted, list_closures(A))) == [[], [0], [0, 1]]
    assert closure_generating_poly(A) == parse("1 + q + q^2")
    assert closure_generating_poly(build_annulus("plus", (1, 2, 1, 1))) == R_PLUS_1211
    with pytest.raises(ValueError):
        closure_generating_poly(build_annulus("minus", (2, 3)))


def test_plus_equals_minus_with_first_term_raised():
    A = build_annulus("plus", (1, 2, 1, 1))
    B = build_annulus("minus", (3, 2, 3))
    assert same_annulus(A, B)
    assert not same_annulus(A, build_annulus("minus", (2, 2, 3)))


def _multigraph(A):
    g = nx.MultiDiGraph()
    for v in A.inner:
        g.add_node(v, side="inner")
    for v in A.outer:
        g.add_node(v, side="outer")
    for x in A.arcs:
        g.add_edge(x.tail, x.head)
    return g


@pytest.mark.parametrize("a", [a for a in regular_sequences(7)], ids=str)
def test_isomorphism_with_networkx(a):
    c = hirzebruch_convert(a)
    A = build_annulus("plus", a)
    B = build_annulus("minus", (c[0] + 1,) + c[1:])
    assert structure_signature(A) == structure_signature(B)
    same_side = lambda x, y: x["side"] == y["side"]  # noqa: E731
    assert nx.is_isomorphic(_multigraph(A), _multigraph(B), node_match=same_side)


# -- independent oracles for loops ------------------------------------------------


def _subdivided(A):
    g = nx.DiGraph()
    for i, x in enumerate(A.arcs):
        g.add_edge(x.tail, ("arc", i))
        g.add_edge(("arc", i), x.head)
    return g


def _polar(A, x, y):
    theta = 2 * math.pi * x / A.period
    r = 6.0 - y  # outer boundary at radius 6, inner at 3
    return (r * math.cos(theta), r * math.sin(theta))


def _area_by_polygon(A, loop):
    """Count triangles inside the loop drawn on concentric circles."""
    pts = []
    for i in loop.arcs:
        (px, py), (qx, qy) = A.arc_points(A.arcs[i])
        # translate so this arc starts where the previous one ended
        if pts:
            dx = pts[-1][0] - px
            px, qx = px + dx, qx + dx
        steps = 64
        for s in range(steps):
            pts.append((px + (qx - px) * s / steps, py + (qy - py) * s / steps))
    curve = Polygon([_polar(A, x, y) for x, y in pts])
    count = 0
    for t in A.strip_triangles:
        cx = sum(A.strip_positions[v][0] for v in t) / 3
        cy = sum(A.strip_positions[v][1] for v in t) / 3
        # triangles between the loop and the inner circle lie inside the curve
        if curve.contains(Point(_polar(A, cx, cy))):
            count += 1
    return count


CASES = [("plus", a) for a in regular_sequences(6)] + [
    ("minus", c) for c in itertools.chain.from_iterable(itertools.product(range(2, 5), repeat=k) for k in (1, 2, 3))
    if any(x > 2 for x in c)
]


@pytest.mark.parametrize("kind,seq", CASES, ids=str)
def test_loops_against_oracles(kind, seq):
    A = build_annulus(kind, seq)
    loops = enumerate_loops(A)
    mine = Counter(tuple(sorted(l.arcs)) for l in loops)
    theirs = Counter(
        tuple(sorted(n[1] for n in cyc if isinstance(n, tuple))) for cyc in nx.simple_cycles(_subdivided(A))
    )
    assert mine == theirs
    R = rotundus_plus(seq) if kind == "plus" else rotundus_minus(seq)
    assert loop_generating_poly(A, "area") == R
    for l in loops:
        assert l.area + l.coarea == A.triangle_count
        assert abs(l.winding) == 1
        assert l.area == _area_by_polygon(A, l)


def test_simple_cycles_matches_networkx():
    g = nx.gnp_random_graph(7, 0.35, seed=3, directed=True)
    g.add_edge(2, 2)
    succ = {v: sorted(g.successors(v)) for v in g}
    mine = sorted(tuple(sorted(c)) for c in simple_cycles(succ))
    theirs = sorted(tuple(sorted(c)) for c in nx.simple_cycles(g))
    assert mine == theirs
