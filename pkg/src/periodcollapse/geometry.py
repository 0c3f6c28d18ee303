"""Exact planar geometry over a quadratic field.

Points carry :class:`~periodcollapse.field.QuadraticNumber` coordinates.
Polygons are closed, simple and stored counter-clockwise.  Lattice-preserving
maps ``x -> Ax + b`` with ``A`` in GL2(Z) act on points, segments and polygons.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import ContextMismatchError, DomainError
from .field import FieldContext, QuadraticNumber, common_form, _sign_int


@dataclass(frozen=True)
class Point:
    x: QuadraticNumber
    y: QuadraticNumber

    def __post_init__(self):
        if self.x.context != self.y.context:
            raise ContextMismatchError("point coordinates from different fields")

    @property
    def context(self) -> FieldContext:
        return self.x.context

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, s) -> Point:
        return Point(self.x * s, self.y * s)

    def is_lattice(self) -> bool:
        return self.x.is_integer() and self.y.is_integer()

    def is_irrational(self) -> bool:
        """True when at least one coordinate is irrational."""
        return not (self.x.is_rational() and self.y.is_rational())

    def __str__(self):
        return f"({self.x}, {self.y})"


def point(x, y, context: FieldContext) -> Point:
    """Build a point, embedding plain ``int``/``Fraction`` coordinates into ``context``."""
    if not isinstance(x, QuadraticNumber):
        x = context(x)
    if not isinstance(y, QuadraticNumber):
        y = context(y)
    return Point(x, y)


def cross(u: Point, v: Point) -> QuadraticNumber:
    return u.x * v.y - u.y * v.x


def orient(a: Point, b: Point, c: Point) -> int:
    """+1 if ``a, b, c`` turn left, -1 if right, 0 if collinear."""
    return cross(b - a, c - a).sign()


@dataclass(frozen=True)
class LatticeVector:
    u: int
    v: int

    def __add__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.u + other.u, self.v + other.v)

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.u - other.u, self.v - other.v)

    def __neg__(self) -> LatticeVector:
        return LatticeVector(-self.u, -self.v)

    def __mul__(self, s: int) -> LatticeVector:
        return LatticeVector(s * self.u, s * self.v)

    __rmul__ = __mul__

    def is_primitive(self) -> bool:
        return math.gcd(self.u, self.v) == 1

    def primitive(self) -> LatticeVector:
        g = math.gcd(self.u, self.v)
        if g == 0:
            raise DomainError("zero vector has no primitive direction")
        return LatticeVector(self.u // g, self.v // g)

    def scaled_point(self, c: QuadraticNumber) -> Point:
        return Point(c * self.u, c * self.v)

    def as_point(self, context: FieldContext) -> Point:
        return point(self.u, self.v, context)


def det(v1: LatticeVector, v2: LatticeVector) -> int:
    return v1.u * v2.v - v1.v * v2.u


E1 = LatticeVector(1, 0)
E2 = LatticeVector(0, 1)


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    def __post_init__(self):
        if self.p == self.q:
            raise DomainError("segment endpoints must be distinct")

    def same_as(self, other: Segment) -> bool:
        """Equality as point sets (orientation ignored)."""
        return {self.p, self.q} == {other.p, other.q}

    def contains_point(self, r: Point) -> bool:
        if orient(self.p, self.q, r) != 0:
            return False
        return (min(self.p.x, self.q.x) <= r.x <= max(self.p.x, self.q.x)
                and min(self.p.y, self.q.y) <= r.y <= max(self.p.y, self.q.y))


class Polygon:
    """Closed simple polygon with counter-clockwise vertex order.

    The constructor reverses clockwise input.  Collinear vertices are kept
    (the degenerate quadrilateral with a vertex on its hypotenuse is stored
    as given); :func:`canonical_edges` merges them.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Point]):
        vs = list(vertices)
        if len(vs) < 3:
            raise DomainError("a polygon needs at least 3 vertices")
        ctx = vs[0].context
        for v in vs:
            if v.context != ctx:
                raise ContextMismatchError("polygon vertices from different fields")
        for i, v in enumerate(vs):
            if v == vs[i - 1]:
                raise DomainError(f"repeated consecutive vertex {v}")
        if _signed_area2(vs).sign() < 0:
            vs.reverse()
        self.vertices = tuple(vs)

    @property
    def context(self) -> FieldContext:
        return self.vertices[0].context

    def edges(self) -> list[Segment]:
        vs = self.vertices
        return [Segment(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def same_cycle(self, other: Polygon) -> bool:
        """Equal vertex lists up to cyclic rotation."""
        a, b = self.vertices, other.vertices
        if len(a) != len(b):
            return False
        return any(a[i:] + a[:i] == b for i in range(len(a)))

    def is_integral(self) -> bool:
        return all(v.is_lattice() for v in self.vertices)

    def __repr__(self):
        return "Polygon([" + ", ".join(str(v) for v in self.vertices) + "])"


def _signed_area2(vs: Sequence[Point]) -> QuadraticNumber:
    n = len(vs)
    total = vs[0].x * 0
    for i in range(n):
        total = total + cross(vs[i], vs[(i + 1) % n])
    return total


def area(p: Polygon) -> QuadraticNumber:
    """Exact shoelace area; positive because polygons are stored CCW."""
    return _signed_area2(p.vertices) / 2


def dilate(p: Polygon, t: int) -> Polygon:
    if not isinstance(t, int) or t < 1:
        raise DomainError(f"dilation factor must be a positive integer, got {t!r}")
    if t == 1:
        return p
    return Polygon(v.scale(t) for v in p.vertices)


# -- integral affine maps ---------------------------------------------------

Geometry = Union[Point, Segment, Polygon]


@dataclass(frozen=True)
class IntegralAffineMap:
    """``x -> A x + b`` with integer ``A`` of determinant +-1 and integer ``b``."""

    matrix: tuple[tuple[int, int], tuple[int, int]]
    translation: tuple[int, int] = (0, 0)

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        if a * d - b * c not in (1, -1):
            raise DomainError(f"matrix {self.matrix} is not unimodular")

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def _apply_point(self, p: Point) -> Point:
        (a, b), (c, d) = self.matrix
        tx, ty = self.translation
        return Point(p.x * a + p.y * b + tx, p.x * c + p.y * d + ty)

    def __call__(self, g: Geometry) -> Geometry:
        return apply_map(self, g)

    def compose(self, other: IntegralAffineMap) -> IntegralAffineMap:
        """``self o other``."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        u, v = other.translation
        tx, ty = self.translation
        return IntegralAffineMap(
            ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)),
            (a * u + b * v + tx, c * u + d * v + ty),
        )

    def apply_vector(self, v: LatticeVector) -> LatticeVector:
        (a, b), (c, d) = self.matrix
        return LatticeVector(a * v.u + b * v.v, c * v.u + d * v.v)


IDENTITY = IntegralAffineMap(((1, 0), (0, 1)))


def sector_matrix(v1: LatticeVector, v2: LatticeVector) -> IntegralAffineMap:
    """Linear map sending ``e1 -> v1`` and ``e2 -> v2``."""
    return IntegralAffineMap(((v1.u, v2.u), (v1.v, v2.v)))


def apply_map(m: IntegralAffineMap, g: Geometry) -> Geometry:
    if isinstance(g, Point):
        return m._apply_point(g)
    if isinstance(g, Segment):
        return Segment(m._apply_point(g.p), m._apply_point(g.q))
    if isinstance(g, Polygon):
        # constructor restores CCW order when det = -1
        return Polygon(m._apply_point(v) for v in g.vertices)
    raise TypeError(f"cannot map {type(g).__name__}")


# -- membership -------------------------------------------------------------

def on_boundary(p: Polygon, q: Point) -> bool:
    return any(e.contains_point(q) for e in p.edges())


def contains(p: Polygon, q: Point) -> bool:
    """Closed-region membership.

    Boundary points short-circuit to ``True``; otherwise a ray towards +x is
    crossed with the half-open rule (an edge counts iff exactly one endpoint
    lies strictly above the ray's line).
    """
    if on_boundary(p, q):
        return True
    inside = False
    vs = p.vertices
    for i in range(len(vs)):
        a, b = vs[i - 1], vs[i]
        if (a.y > q.y) != (b.y > q.y):
            # q strictly left of the crossing iff orient(a,b,q) has the sign of b.y - a.y
            if orient(a, b, q) * (b.y - a.y).sign() > 0:
                inside = not inside
    return inside


class LatticeTester:
    """Integer-only evaluation of :func:`contains` at lattice points.

    Each edge's orientation test is linear in the query point, so it is
    precomputed as integer coefficients ``(A + B sqrt d) / D`` and evaluated
    with :func:`~periodcollapse.field._sign_int`.  The decision rule is the
    same closed-region, half-open crossing rule as :func:`contains`.
    """

    def __init__(self, p: Polygon):
        self.polygon = p
        self.d = p.context.d
        vs = p.vertices
        self._edges = []
        for i in range(len(vs)):
            a, b = vs[i - 1], vs[i]
            ex, ey = b.x - a.x, b.y - a.y
            # orient(a, b, (X, Y)) = -ey*X + ex*Y + (ey*a.x - ex*a.y)
            forms = [common_form(c) for c in (-ey, ex, ey * a.x - ex * a.y)]
            den = math.lcm(*(f[2] for f in forms))
            cx, cy, c0 = [(f[0] * (den // f[2]), f[1] * (den // f[2])) for f in forms]
            self._edges.append((a, b, ey.sign(), cx, cy, c0,
                                min(a.x, b.x), max(a.x, b.x), min(a.y, b.y), max(a.y, b.y)))

    def row(self, y: int):
        """Per-row closure ``X -> bool`` for lattice points ``(X, y)``."""
        d = self.d
        boundary = []
        crossing = []
        for a, b, sdy, cx, cy, c0, xlo, xhi, ylo, yhi in self._edges:
            on_row = ylo <= y <= yhi
            straddles = (a.y > y) != (b.y > y)
            if not (on_row or straddles):
                continue
            ra = cy[0] * y + c0[0]
            rb = cy[1] * y + c0[1]
            if on_row:
                boundary.append((cx, ra, rb, math.ceil(xlo), math.floor(xhi)))
            if straddles:
                crossing.append((cx, ra, rb, sdy))

        def test(x: int) -> bool:
            for cx, ra, rb, lo, hi in boundary:
                if lo <= x <= hi and _sign_int(cx[0] * x + ra, cx[1] * x + rb, d) == 0:
                    return True
            inside = False
            for cx, ra, rb, sdy in crossing:
                if _sign_int(cx[0] * x + ra, cx[1] * x + rb, d) * sdy > 0:
                    inside = not inside
            return inside

        return test

    def __call__(self, x: int, y: int) -> bool:
        return self.row(y)(x)


# -- edge analysis ----------------------------------------------------------

class SlopeClass(enum.Enum):
    RATIONAL = "rational"
    IRRATIONAL = "irrational"
    VERTICAL = "vertical"


def slope_class(s: Segment) -> SlopeClass:
    dx = s.q.x - s.p.x
    if not dx:
        return SlopeClass.VERTICAL
    return SlopeClass.RATIONAL if ((s.q.y - s.p.y) / dx).is_rational() else SlopeClass.IRRATIONAL


def merged_vertices(p: Polygon) -> list[Point]:
    """Vertices of ``p`` with every collinear pass-through vertex dropped."""
    vs = list(p.vertices)
    changed = True
    while changed and len(vs) > 3:
        changed = False
        for i in range(len(vs)):
            prev, cur, nxt = vs[i - 1], vs[i], vs[(i + 1) % len(vs)]
            if orient(prev, cur, nxt) == 0:
                del vs[i]
                changed = True
                break
    return vs


def canonical_edges(p: Polygon) -> list[tuple[Segment, SlopeClass]]:
    vs = merged_vertices(p)
    out = []
    for i in range(len(vs)):
        s = Segment(vs[i], vs[(i + 1) % len(vs)])
        out.append((s, slope_class(s)))
    return out


def canonical_polygon(p: Polygon) -> Polygon:
    return Polygon(merged_vertices(p))


def is_convex(p: Polygon) -> bool:
    """Convexity of a CCW polygon: no right turn at any vertex."""
    vs = p.vertices
    n = len(vs)
    return all(orient(vs[i - 1], vs[i], vs[(i + 1) % n]) >= 0 for i in range(n))


def is_star_shaped(p: Polygon, center: Point) -> bool:
    """``center`` lies in the kernel: weakly left of every CCW edge."""
    return all(orient(e.p, e.q, center) >= 0 for e in p.edges())


# -- simplicity -------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    defects: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.defects

    def __bool__(self):
        return self.ok


def _segments_intersect(p1, p2, q1, q2) -> bool:
    o1, o2 = orient(p1, p2, q1), orient(p1, p2, q2)
    o3, o4 = orient(q1, q2, p1), orient(q1, q2, p2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    s1, s2 = Segment(p1, p2), Segment(q1, q2)
    return ((o1 == 0 and s1.contains_point(q1)) or (o2 == 0 and s1.contains_point(q2))
            or (o3 == 0 and s2.contains_point(p1)) or (o4 == 0 and s2.contains_point(p2)))


def validate_simple(vertices: Sequence[Point] | Polygon) -> ValidationReport:
    """Report crossings, repeated vertices and clockwise orientation.

    Takes the raw vertex order, so a clockwise list is reported rather than
    silently reversed.
    """
    vs = list(vertices.vertices if isinstance(vertices, Polygon) else vertices)
    n = len(vs)
    defects = []
    if n < 3:
        return ValidationReport((f"only {n} vertices",))
    seen = {}
    for i, v in enumerate(vs):
        if v in seen:
            defects.append(f"repeated vertex {v} at positions {seen[v]} and {i}")
        seen.setdefault(v, i)
    if defects:
        return ValidationReport(tuple(defects))
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        for j in range(i + 1, n):
            c, d = vs[j], vs[(j + 1) % n]
            if j == i + 1 or (i == 0 and j == n - 1):
                # adjacent edges may only touch at the shared vertex
                shared = b if j == i + 1 else a
                other_own = a if j == i + 1 else b
                other = d if j == i + 1 else c
                if orient(other_own, shared, other) == 0 and (
                    (other_own - shared).x * (other - shared).x
                    + (other_own - shared).y * (other - shared).y
                ).sign() > 0:
                    defects.append(f"edges {i} and {j} fold back onto each other")
                continue
            if _segments_intersect(a, b, c, d):
                defects.append(f"edges {i} and {j} cross")
    area2 = _signed_area2(vs)
    if not defects and area2.sign() <= 0:
        defects.append("clockwise orientation" if area2.sign() < 0 else "zero area")
    return ValidationReport(tuple(defects))


# -- gluing -----------------------------------------------------------------

def glue(p1: Polygon, p2: Polygon, shared: Segment) -> Polygon:
    """Union of two CCW polygons meeting along the common edge ``shared``.

    ``p1`` must traverse the edge as ``u -> v`` and ``p2`` as ``v -> u``.
    Vertices where the two boundaries join are kept even when collinear.
    """
    def rotate_to(vs, start):
        i = vs.index(start)
        return list(vs[i:] + vs[:i])

    u, v = shared.p, shared.q
    vs1 = p1.vertices
    i = vs1.index(u) if u in vs1 else -1
    if i < 0 or vs1[(i + 1) % len(vs1)] != v:
        u, v = v, u
        i = vs1.index(u) if u in vs1 else -1
        if i < 0 or vs1[(i + 1) % len(vs1)] != v:
            raise DomainError("shared segment is not an edge of the first polygon")
    vs2 = p2.vertices
    j = vs2.index(v) if v in vs2 else -1
    if j < 0 or vs2[(j + 1) % len(vs2)] != u:
        raise DomainError("shared segment is not an edge of the second polygon")
    path1 = rotate_to(vs1, v)  # v ... u
    path2 = rotate_to(vs2, u)  # u ... v
    return Polygon(path1 + path2[1:-1])


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Monotone-chain hull in CCW order with collinear points removed."""
    pts = sorted(set(points), key=lambda q: (q.x, q.y))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out = []
        for q in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], q) <= 0:
                out.pop()
            out.append(q)
        return out

    lower, upper = half(pts), half(reversed(pts))
    return lower[:-1] + upper[:-1]
