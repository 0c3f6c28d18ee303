"""Exact lattice-point counters.

:func:`count_bruteforce` is the reference: it tests every lattice point of
the dilated bounding box.  The other counters are faster and are checked
against it throughout the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DomainError
from .constructions import AssembledPolygon
from .field import QuadraticNumber, _floor_int, common_form
from .geometry import LatticeTester, Point, Polygon, area, dilate, is_convex


@dataclass(frozen=True)
class CountResult:
    t: int
    count: int
    method: str

    def __int__(self):
        return self.count


def _check_t(t) -> None:
    if not isinstance(t, int) or t < 1:
        raise DomainError(f"dilation factor must be a positive integer, got {t!r}")


def count_segment(a: QuadraticNumber, b: QuadraticNumber, t: int) -> int:
    """Number of integers in the closed interval ``[t a, t b]``."""
    _check_t(t)
    if a >= b:
        raise DomainError(f"need a < b, got a = {a}, b = {b}")
    return math.floor(b * t) - math.ceil(a * t) + 1


def count_bruteforce(p: Polygon, t: int) -> CountResult:
    _check_t(t)
    q = dilate(p, t)
    xs = [v.x for v in q.vertices]
    ys = [v.y for v in q.vertices]
    x0, x1 = math.ceil(min(xs)), math.floor(max(xs))
    y0, y1 = math.ceil(min(ys)), math.floor(max(ys))
    tester = LatticeTester(q)
    total = 0
    for y in range(y0, y1 + 1):
        inside = tester.row(y)
        total += sum(1 for x in range(x0, x1 + 1) if inside(x))
    return CountResult(t, total, "bruteforce")


def count_scanline(p: Polygon, t: int) -> CountResult:
    """Row-by-row count for a convex polygon.

    Each non-horizontal edge meets row ``y`` at ``x = c + m*y``; with the
    field coefficients over a common denominator the row endpoints are
    floored in pure integer arithmetic.  Floor commutes with max, so the row
    extent is ``max floor(x)`` and ``min ceil(x)`` over the edges covering it.
    """
    _check_t(t)
    if not is_convex(p):
        raise DomainError("scanline counting needs a convex polygon; decompose it first")
    q = dilate(p, t)
    d = q.context.d
    vs = q.vertices
    ys = [v.y for v in vs]
    y0, y1 = math.ceil(min(ys)), math.floor(max(ys))
    lines = []
    flats = []
    for i in range(len(vs)):
        a, b = vs[i - 1], vs[i]
        if a.y == b.y:
            if a.y.is_integer():
                flats.append((int(a.y.a), math.floor(max(a.x, b.x)), math.ceil(min(a.x, b.x))))
            continue
        slope = (b.x - a.x) / (b.y - a.y)
        (c1, c2, cd), (m1, m2, md) = common_form(a.x - slope * a.y), common_form(slope)
        den = math.lcm(cd, md)
        lines.append((math.ceil(min(a.y, b.y)), math.floor(max(a.y, b.y)),
                       c1 * (den // cd), c2 * (den // cd), m1 * (den // md), m2 * (den // md), den))
    total = 0
    for y in range(y0, y1 + 1):
        hi = lo = None
        for ylo, yhi, c1, c2, m1, m2, den in lines:
            if ylo <= y <= yhi:
                A, B = c1 + m1 * y, c2 + m2 * y
                f = _floor_int(A, B, den, d)
                c = -_floor_int(-A, -B, den, d)
                hi = f if hi is None else max(hi, f)
                lo = c if lo is None else min(lo, c)
        for fy, f, c in flats:
            if fy == y:
                hi = f if hi is None else max(hi, f)
                lo = c if lo is None else min(lo, c)
        if hi is not None and hi >= lo:
            total += hi - lo + 1
    return CountResult(t, total, "scanline")


def _lattice_points_on(p: Point, q: Point, t: int) -> int:
    dx, dy = int((q.x - p.x).a), int((q.y - p.y).a)
    return math.gcd(dx, dy) * t + 1


def count_piece(p: Polygon, t: int) -> int:
    """Scanline count of a convex piece, or of a dart split at its lattice diagonal.

    ``Q(h, k)`` with ``1/h + 1/k < 1`` has a reflex vertex at ``(1, 1)``; the
    diagonal from the origin to that vertex cuts it into two triangles.
    """
    if is_convex(p):
        return count_scanline(p, t).count
    vs = p.vertices
    for i in range(len(vs)):
        j = (i + 2) % len(vs)
        if len(vs) != 4 or not (vs[i].is_lattice() and vs[j].is_lattice()):
            continue
        t1 = Polygon([vs[i], vs[(i + 1) % 4], vs[j]])
        t2 = Polygon([vs[j], vs[(j + 1) % 4], vs[i]])
        if is_convex(t1) and is_convex(t2) and area(t1) + area(t2) == area(p):
            return (count_scanline(t1, t).count + count_scanline(t2, t).count
                    - _lattice_points_on(vs[i], vs[j], t))
    return count_bruteforce(p, t).count


def count_assembled(a: AssembledPolygon, t: int) -> CountResult:
    """Inclusion-exclusion over the pieces of an assembly.

    Pieces are counted with :func:`count_piece` and every shared ray edge is
    subtracted once.  In a fan all pieces and edges pass through the origin, which is
    therefore added back once; a two-piece gluing needs no such term.
    """
    _check_t(t)
    total = sum(count_piece(p, t) for p in a.pieces)
    total -= sum(count_segment(e.length * 0, e.length, t) for e in a.shared_edges)
    if a.fan:
        total += 1
    return CountResult(t, total, "inclusion-exclusion")


def count(target: Union[Polygon, AssembledPolygon], t: int) -> CountResult:
    """Fastest exact counter valid for ``target``."""
    if isinstance(target, AssembledPolygon):
        return count_assembled(target, t)
    if is_convex(target):
        return count_scanline(target, t)
    return count_bruteforce(target, t)
