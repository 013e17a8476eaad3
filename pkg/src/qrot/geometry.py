"""Exact integer predicates shared by the polygon and annulus models.

All coordinates are ints.  Layouts scale by 3 so triangle centroids are
lattice points too.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Point = tuple[int, int]


def centroid(a: Point, b: Point, c: Point) -> Point:
    sx, sy = a[0] + b[0] + c[0], a[1] + b[1] + c[1]
    if sx % 3 or sy % 3:
        raise ValueError("layout is not scaled for integral centroids")
    return sx // 3, sy // 3


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b - a) x (c - a)."""
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def ray_up_crosses(p: Point, q: Point, c: Point) -> bool:
    """Does the upward vertical ray from ``c`` cross segment pq?

    Half-open in x so that a ray through a shared vertex of two consecutive
    segments is counted exactly once.
    """
    (px, py), (qx, qy) = p, q
    cx, cy = c
    if (px <= cx) == (qx <= cx):
        return False
    # y of the segment at x = cx is above cy
    num = (py - cy) * (qx - px) + (cx - px) * (qy - py)
    return (num > 0) if qx > px else (num < 0)


def inside_even_odd(polygon: Sequence[Point], c: Point) -> bool:
    """Even-odd membership of ``c`` in a closed (possibly self-touching) walk."""
    hits = 0
    m = len(polygon)
    for i in range(m):
        if ray_up_crosses(polygon[i], polygon[(i + 1) % m], c):
            hits += 1
    return hits % 2 == 1


def periodic_crossings(p: Point, q: Point, c: Point, period: int) -> int:
    """Number of translates pq + (t*period, 0) crossed by the upward ray from ``c``."""
    lo = min(p[0], q[0])
    hi = max(p[0], q[0])
    # translates whose half-open x-span [lo, hi) + t*period can contain c[0]
    t_min = -((hi - c[0]) // period) - 1
    t_max = (c[0] - lo) // period + 1
    total = 0
    for t in range(t_min, t_max + 1):
        d = t * period
        if ray_up_crosses((p[0] + d, p[1]), (q[0] + d, q[1]), c):
            total += 1
    return total


def mask_popcount(mask: int) -> int:
    return bin(mask).count("1")


def xor_all(masks: Iterable[int]) -> int:
    out = 0
    for m in masks:
        out ^= m
    return out
