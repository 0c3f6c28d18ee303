"""Generators for the irrational polygons with polynomial lattice-point counts.

Families:

* CGLS right triangles ``conv{(0,0), (h,0), (0,k)}`` with ``h + k = beta`` and
  ``1/h + 1/k = alpha``;
* quadrilaterals ``Q(h, k) = conv{(0,0), (h,0), (1,1), (0,k)}`` with ``h + k``
  an integer;
* pyramids over an irrational base of integer length at height 1, and the
  two-piece cut-and-paste that turns such a pyramid into ``Q(h, k)``;
* the reflected-triangle union whose count is not polynomial;
* unimodular fans filled with ``Q`` pieces, including the seeds that realise
  a prescribed number of edges or of irrational vertices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import ConstraintError, DomainError
from .field import FieldContext, QuadraticNumber, field, squarefree_decompose
from .geometry import (
    E1, E2, IntegralAffineMap, LatticeVector, Point, Polygon, Segment,
    apply_map, canonical_polygon, det, glue, point, sector_matrix,
)


# -- root pairs -------------------------------------------------------------

def quadratic_roots(s: Fraction, p: Fraction) -> tuple[QuadraticNumber, QuadraticNumber]:
    """Irrational roots ``(larger, smaller)`` of ``x^2 - s x + p``."""
    disc = Fraction(s) ** 2 - 4 * Fraction(p)
    if disc < 0:
        raise ConstraintError(f"x^2 - {s}x + {p} has no real roots")
    # sqrt(num/den) = sqrt(num*den)/den = r*sqrt(d)/den
    num, den = disc.numerator, disc.denominator
    if num == 0:
        raise ConstraintError(f"x^2 - {s}x + {p} has a double rational root; slope would be rational")
    r, d = squarefree_decompose(num * den)
    if d == 1:
        raise ConstraintError(
            f"discriminant {disc} is a rational square; roots are rational and the slope h/k is rational"
        )
    ctx = field(d)
    half = Fraction(r, 2 * den)
    return ctx(Fraction(s) / 2, half), ctx(Fraction(s) / 2, -half)


@lru_cache(maxsize=None)
def base_pair(beta: int = 5) -> tuple[QuadraticNumber, QuadraticNumber]:
    """``(h0, k0)`` with ``h0 + k0 = beta`` and ``1/h0 + 1/k0 = 1``, ``h0 > k0``.

    ``beta = 5`` gives ``h0, k0 = (5 +- sqrt 5)/2``.
    """
    if not isinstance(beta, int) or beta < 5:
        raise ConstraintError(f"beta must be an integer >= 5 for positive irrational h0, k0; got {beta!r}")
    return quadratic_roots(Fraction(beta), Fraction(beta))


# -- CGLS triangles -----------------------------------------------------------

@dataclass(frozen=True)
class CGLSParams:
    alpha: int
    beta: int

    def __post_init__(self):
        if not (isinstance(self.alpha, int) and isinstance(self.beta, int)) or self.alpha < 1 or self.beta < 1:
            raise ConstraintError("alpha and beta must be positive integers")

    def legs(self) -> tuple[QuadraticNumber, QuadraticNumber]:
        """``(h, k)``: roots of ``x^2 - beta x + beta/alpha``."""
        return quadratic_roots(Fraction(self.beta), Fraction(self.beta, self.alpha))


def cgls_triangle(params: CGLSParams) -> Polygon:
    h, k = params.legs()
    if h.sign() <= 0 or k.sign() <= 0:
        raise ConstraintError(f"legs h={h}, k={k} must be positive")
    ctx = h.context
    return Polygon([point(0, 0, ctx), Point(h, ctx(0)), Point(ctx(0), k)])


# -- quadrilaterals and pyramids ----------------------------------------------

def _check_quad(h: QuadraticNumber, k: QuadraticNumber) -> None:
    if h.context != k.context:
        raise ConstraintError("h and k must lie in the same quadratic field")
    if h.is_rational() or k.is_rational():
        raise ConstraintError("h and k must both be irrational")
    if h.sign() <= 0 or k.sign() <= 0:
        raise ConstraintError("h and k must be positive")
    if not (h + k).is_integer():
        raise ConstraintError(f"h + k = {h + k} is not an integer")
    if (1 / h + 1 / k) > 1:
        raise ConstraintError(f"1/h + 1/k = {1 / h + 1 / k} exceeds 1; (1,1) would leave the triangle hull")


def quad_Q(h: QuadraticNumber, k: QuadraticNumber) -> Polygon:
    """``conv{(0,0), (h,0), (1,1), (0,k)}``.

    When ``1/h + 1/k == 1`` the vertex ``(1,1)`` sits on the hypotenuse; it is
    kept in the vertex list and the polygon is geometrically a triangle.
    """
    _check_quad(h, k)
    ctx = h.context
    zero = ctx(0)
    return Polygon([Point(zero, zero), Point(h, zero), point(1, 1, ctx), Point(zero, k)])


def pyramid(a: QuadraticNumber, b: QuadraticNumber) -> Polygon:
    """Triangle with apex at the origin over the base ``[a, b] x {1}``."""
    if a.context != b.context:
        raise ConstraintError("endpoints must lie in the same quadratic field")
    if a.is_rational() or b.is_rational():
        raise ConstraintError("base endpoints must be irrational")
    n = b - a
    if not n.is_integer() or n.sign() <= 0:
        raise ConstraintError(f"base length b - a = {n} is not a positive integer")
    ctx = a.context
    return Polygon([point(0, 0, ctx), Point(b, ctx(1)), Point(a, ctx(1))])


PHI_1 = IntegralAffineMap(((-1, -1), (0, -1)), (1, 1))
PHI_2 = IntegralAffineMap(((0, -1), (1, -1)), (1, 1))
REFLECT_X = IntegralAffineMap(((1, 0), (0, -1)))


@dataclass(frozen=True)
class CutAndPaste:
    cut_edge: Segment
    left: Polygon
    right: Polygon
    left_image: Polygon
    right_image: Polygon
    glued_edge: Segment
    glued: Polygon


def cut_and_paste(h: QuadraticNumber, k: QuadraticNumber) -> CutAndPaste:
    """Cut the pyramid over ``[-h, k]`` along ``x = 0`` and reglue into ``Q(h, k)``."""
    _check_quad(h, k)
    ctx = h.context
    o, top = point(0, 0, ctx), point(0, 1, ctx)
    cut = Segment(o, top)
    left = Polygon([o, top, Point(-h, ctx(1))])
    right = Polygon([o, Point(k, ctx(1)), top])
    li, ri = apply_map(PHI_1, left), apply_map(PHI_2, right)
    e1, e2 = apply_map(PHI_1, cut), apply_map(PHI_2, cut)
    if not e1.same_as(e2):
        raise AssertionError("images of the cut edge differ")
    return CutAndPaste(cut, left, right, li, ri, e1, glue(li, ri, e1))


# -- assembled polygons -----------------------------------------------------------

@dataclass(frozen=True)
class RayEdge:
    """Segment from the origin to ``length * ray`` with ``ray`` primitive."""

    ray: LatticeVector
    length: QuadraticNumber

    @property
    def segment(self) -> Segment:
        ctx = self.length.context
        return Segment(point(0, 0, ctx), self.ray.scaled_point(self.length))


@dataclass(frozen=True)
class AssembledPolygon:
    """Union of convex pieces glued along edges emanating from the origin.

    ``fan`` is True when the pieces surround the origin (every piece and every
    shared edge contains it); counting then adds the origin back once.
    """

    pieces: tuple[Polygon, ...]
    shared_edges: tuple[RayEdge, ...]
    outer: Polygon
    n_total: int = 0
    fan: bool = True
    data: "SectorData | None" = dc_field(default=None, compare=False)

    @property
    def context(self) -> FieldContext:
        return self.outer.context


def counterexample(beta: int) -> AssembledPolygon:
    """``T(1, beta)`` together with its mirror image in the x-axis."""
    if not isinstance(beta, int) or beta < 5:
        raise ConstraintError(f"beta must be an integer >= 5, got {beta!r}")
    t = cgls_triangle(CGLSParams(1, beta))
    h, k = CGLSParams(1, beta).legs()
    ctx = h.context
    mirrored = apply_map(REFLECT_X, t)
    outer = Polygon([Point(ctx(0), -k), Point(h, ctx(0)), Point(ctx(0), k), point(0, 0, ctx)])
    return AssembledPolygon((t, mirrored), (RayEdge(E1, h),), outer, 0, fan=False)


# -- sector data ------------------------------------------------------------------

class Label(enum.Enum):
    H = "H"
    K = "K"

    @property
    def opposite(self) -> Label:
        return Label.K if self is Label.H else Label.H


@dataclass(frozen=True)
class SectorDatum:
    ray: LatticeVector
    label: Label
    offset: int = 0

    def __post_init__(self):
        if not isinstance(self.offset, int) or self.offset < 0:
            raise ConstraintError(f"offset must be a nonnegative integer, got {self.offset!r}")
        if not self.ray.is_primitive():
            raise ConstraintError(f"ray ({self.ray.u}, {self.ray.v}) is not primitive")


@dataclass(frozen=True)
class SectorData:
    """Cyclic rays with labels; ray ``i`` carries ``h0 + offset`` (H) or ``k0 + offset`` (K)."""

    entries: tuple[SectorDatum, ...]
    beta: int = 5

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        problems = self.problems()
        if problems:
            raise ConstraintError("invalid sector data: " + "; ".join(problems))

    def __len__(self):
        return len(self.entries)

    def value(self, i: int) -> QuadraticNumber:
        e = self.entries[i % len(self.entries)]
        h0, k0 = base_pair(self.beta)
        return (h0 if e.label is Label.H else k0) + e.offset

    def values(self) -> list[QuadraticNumber]:
        return [self.value(i) for i in range(len(self.entries))]

    @property
    def n_total(self) -> int:
        return sum(e.offset for e in self.entries)

    def problems(self) -> list[str]:
        es = self.entries
        n = len(es)
        out = []
        if n < 4 or n % 2:
            out.append(f"need an even number >= 4 of rays, got {n}")
            return out
        base_pair(self.beta)
        h0, k0 = base_pair(self.beta)
        for i in range(n):
            a, b = es[i], es[(i + 1) % n]
            if det(a.ray, b.ray) != 1:
                out.append(f"det(V{i + 1}, V{(i + 1) % n + 1}) = {det(a.ray, b.ray)}, not 1")
            if a.label == b.label:
                out.append(f"labels of rays {i + 1} and {(i + 1) % n + 1} do not alternate")
                continue
            ca = (h0 if a.label is Label.H else k0) + a.offset
            cb = (h0 if b.label is Label.H else k0) + b.offset
            if not (ca + cb).is_integer():
                out.append(f"c{i + 1} + c{(i + 1) % n + 1} is not an integer")
            s = 1 / ca + 1 / cb
            if s > 1 or (s == 1 and (a.offset or b.offset)):
                out.append(f"1/c{i + 1} + 1/c{(i + 1) % n + 1} = {s} violates the <= 1 bound")
        return out


def assemble(data: SectorData) -> AssembledPolygon:
    """Fill sector ``(V_i, V_{i+1})`` with ``M(V_i, V_{i+1}) Q(c_i, c_{i+1})``.

    ``c_i`` lands on ray ``V_i`` in both sectors bounded by it, so neighbouring
    pieces share the edge from the origin to ``c_i V_i``.
    """
    n = len(data)
    cs = data.values()
    rays = [e.ray for e in data.entries]
    ctx = cs[0].context
    pieces, edges, outer = [], [], []
    for i in range(n):
        j = (i + 1) % n
        pieces.append(apply_map(sector_matrix(rays[i], rays[j]), quad_Q(cs[i], cs[j])))
        edges.append(RayEdge(rays[i], cs[i]))
        outer.append(rays[i].scaled_point(cs[i]))
        outer.append((rays[i] + rays[j]).as_point(ctx))
    return AssembledPolygon(tuple(pieces), tuple(edges), Polygon(outer), data.n_total, True, data)


def outer_canonical(a: AssembledPolygon) -> Polygon:
    return canonical_polygon(a.outer)


# -- fans ---------------------------------------------------------------------------

QUADRANT_FAN = (E1, E2, -E1, -E2)


def _check_fan(rays: Sequence[LatticeVector]) -> None:
    n = len(rays)
    for i in range(n):
        if not rays[i].is_primitive():
            raise DomainError(f"ray {rays[i]} is not primitive")
        if det(rays[i], rays[(i + 1) % n]) != 1:
            raise DomainError(f"rays {i} and {(i + 1) % n} do not span a unimodular sector")


def fan_subdivide(rays: Sequence[LatticeVector], target: int) -> list[LatticeVector]:
    """Insert mediants ``V_i + V_{i+1}`` until there are ``target`` rays.

    Each round splits the current sectors in the order 0, 2, 4, ..., 1, 3, ...
    so the refinement spreads around the full angle.
    """
    rays = list(rays)
    _check_fan(rays)
    if not isinstance(target, int) or target % 2:
        raise DomainError(f"target ray count must be even, got {target!r}")
    if target < len(rays):
        raise DomainError(f"target {target} is below the current ray count {len(rays)}")
    while len(rays) < target:
        n = len(rays)
        order = list(range(0, n, 2)) + list(range(1, n, 2))
        split = set(order[: target - n])
        new = []
        for i in range(n):
            new.append(rays[i])
            if i in split:
                new.append(rays[i] + rays[(i + 1) % n])
        rays = new
    _check_fan(rays)
    return rays


def refine_step0(data: SectorData, i: int, new_offset: int = 1) -> SectorData:
    """Replace ray ``i`` by three rays, adding two sectors and four outer edges.

    ``(V_i, c_i)`` becomes ``(V_{i-1}+V_i, c_i)``, ``(V_i, c')``,
    ``(V_i+V_{i+1}, c_i)`` where ``c'`` carries the opposite label with a
    positive offset.  The middle ray is the primitive vector along
    ``V_{i-1} + 2V_i + V_{i+1}``, which points along ``V_i`` in a unimodular fan.
    """
    if not isinstance(new_offset, int) or new_offset < 1:
        raise ConstraintError("the inserted value must come from the strict sets (offset >= 1)")
    es = list(data.entries)
    n = len(es)
    i %= n
    prev, cur, nxt = es[i - 1].ray, es[i].ray, es[(i + 1) % n].ray
    middle = (prev + 2 * cur + nxt).primitive()
    if middle != cur:
        raise AssertionError(f"middle vector {middle} left the ray through {cur}")
    label = es[i].label
    triple = [
        SectorDatum(prev + cur, label, es[i].offset),
        SectorDatum(middle, label.opposite, new_offset),
        SectorDatum(cur + nxt, label, es[i].offset),
    ]
    for a, b in zip([es[i - 1]] + triple, triple + [es[(i + 1) % n]]):
        if det(a.ray, b.ray) != 1:
            raise AssertionError("refinement produced a non-unimodular sector")
    return SectorData(tuple(es[:i] + triple + es[i + 1:]), data.beta)


def _data(pairs, beta) -> SectorData:
    return SectorData(tuple(SectorDatum(v, lab, off) for v, lab, off in pairs), beta)


H, K = Label.H, Label.K

_SEEDS = {
    4: lambda b: _data([(E1, H, 0), (E2, K, 0), (-E1, H, 0), (-E2, K, 0)], b),
    6: lambda b: _data([(E1, H, 0), (E2, K, 0), (-E1, H, 0), (-E2, K, 1)], b),
    7: lambda b: _data([(E1, H, 0), (E2, K, 0), (-E1, H, 1), (-E2, K, 1)], b),
    9: lambda b: _data([(E1, H, 0), (E1 + E2, K, 0), (E2, H, 0),
                        (-E1, K, 0), (-E1 - E2, H, 1), (-E2, K, 1)], b),
}


def seed_data(n_edges: int, beta: int = 5) -> SectorData:
    """Sector data whose assembled polygon has exactly ``n_edges`` edges.

    Seeds for 4, 6, 7 and 9 edges are refined four edges at a time.  Three
    and five edges are unsupported.
    """
    if not isinstance(n_edges, int) or n_edges < 4 or n_edges == 5:
        raise DomainError(f"edge count {n_edges!r} unsupported; need n >= 4 and n != 5")
    seed = {0: 4, 2: 6, 3: 7, 1: 9}[n_edges % 4]
    if n_edges < seed:
        raise DomainError(f"edge count {n_edges} unsupported")
    data = _SEEDS[seed](beta)
    for _ in range((n_edges - seed) // 4):
        data = refine_step0(data, 0, 1)
    return data


def seed_vertex_data(n_vertices: int, beta: int = 5) -> SectorData:
    """All-triangle fan with ``n_vertices`` rays labelled ``h0, k0`` alternately."""
    if not isinstance(n_vertices, int) or n_vertices < 4 or n_vertices % 2:
        raise DomainError(f"vertex count must be an even integer >= 4, got {n_vertices!r}")
    rays = fan_subdivide(QUADRANT_FAN, n_vertices)
    return _data([(v, H if i % 2 == 0 else K, 0) for i, v in enumerate(rays)], beta)
