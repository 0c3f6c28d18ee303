from fractions import Fraction

import pytest

from periodcollapse.constructions import (
    PHI_1, PHI_2, QUADRANT_FAN, CGLSParams, Label, SectorData, SectorDatum, assemble,
    base_pair, cgls_triangle, counterexample, cut_and_paste, fan_subdivide, pyramid,
    quad_Q, refine_step0, seed_data, seed_vertex_data,
)
from periodcollapse.errors import ConstraintError, DomainError
from periodcollapse.field import field
from periodcollapse.geometry import (
    E1, E2, LatticeVector, Point, Segment, SlopeClass, apply_map, area, canonical_edges,
    det, is_star_shaped, point, validate_simple,
)

Q5 = field(5)


def test_base_pair_default(h0k0):
    h0, k0 = h0k0
    assert h0 == Q5(Fraction(5, 2), Fraction(1, 2)) and k0 == Q5(Fraction(5, 2), Fraction(-1, 2))
    assert h0 + k0 == 5 and 1 / h0 + 1 / k0 == 1


def test_cgls_examples(h0k0):
    t15 = cgls_triangle(CGLSParams(1, 5))
    assert t15.same_cycle(cgls_triangle(CGLSParams(1, 5)))
    assert Point(h0k0[0], Q5(0)) in t15.vertices and Point(Q5(0), h0k0[1]) in t15.vertices
    # x^2 - 3x + 1 = 0
    h, k = CGLSParams(3, 3).legs()
    assert (h, k) == (Q5(Fraction(3, 2), Fraction(1, 2)), Q5(Fraction(3, 2), Fraction(-1, 2)))
    assert h * h - 3 * h + 1 == 0
    # x^2 - 4x + 2 = 0
    h, k = CGLSParams(2, 4).legs()
    assert h.d == 2 and (h, k) == (field(2)(2, 1), field(2)(2, -1))
    assert area(cgls_triangle(CGLSParams(2, 4))) == Fraction(4, 2 * 2)


@pytest.mark.parametrize("alpha,beta", [(1, 4), (2, 2), (4, 1)])
def test_cgls_rational_rejected(alpha, beta):
    # beta^2 - 4 beta/alpha vanishes: double rational root
    with pytest.raises(ConstraintError):
        cgls_triangle(CGLSParams(alpha, beta))


def test_cgls_no_real_roots():
    with pytest.raises(ConstraintError):
        cgls_triangle(CGLSParams(1, 3))


def test_quad_examples(h0k0):
    h0, k0 = h0k0
    q = quad_Q(h0, k0)
    assert len(canonical_edges(q)) == 3
    assert Segment(Point(h0, Q5(0)), Point(Q5(0), k0)).contains_point(point(1, 1, Q5))
    assert q.vertices[2] == point(1, 1, Q5)
    q2 = quad_Q(h0 + 1, k0)
    assert len(canonical_edges(q2)) == 4
    s2 = field(2).sqrt
    with pytest.raises(ConstraintError):
        quad_Q(s2, 2 - s2)  # 1/sqrt2 + 1/(2 - sqrt2) = sqrt2 + 1/2 ... > 1
    with pytest.raises(ConstraintError):
        quad_Q(h0, k0 + Fraction(1, 2))
    with pytest.raises(ConstraintError):
        quad_Q(Q5(2), Q5(3))


def test_pyramid_examples(h0k0):
    h0, k0 = h0k0
    p = pyramid(-h0, k0)
    assert set(p.vertices) == {point(0, 0, Q5), Point(-h0, Q5(1)), Point(k0, Q5(1))}
    s2 = field(2).sqrt
    assert pyramid(-s2, 3 - s2).vertices[1].x - pyramid(-s2, 3 - s2).vertices[2].x == 3
    with pytest.raises(ConstraintError):
        pyramid(Q5(Fraction(1, 2)), Q5(Fraction(3, 2)))
    with pytest.raises(ConstraintError):
        pyramid(k0, -h0)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (1, 2), (2, 2), (0, 3)])
def test_cut_and_paste_reproduces_quad(h0k0, m, n):
    h, k = h0k0[0] + m, h0k0[1] + n
    cp = cut_and_paste(h, k)
    assert cp.glued.same_cycle(quad_Q(h, k))
    diag = Segment(point(0, 0, Q5), point(1, 1, Q5))
    assert apply_map(PHI_1, cp.cut_edge).same_as(diag)
    assert apply_map(PHI_2, cp.cut_edge).same_as(diag)
    assert area(cp.left) + area(cp.right) == area(cp.glued) == Fraction(int((h + k).a), 2)


def test_counterexample_examples(h0k0):
    h0, k0 = h0k0
    c = counterexample(5)
    assert set(canonical_edges(c.outer)[i][0].p for i in range(3)) == {
        Point(Q5(0), k0), Point(h0, Q5(0)), Point(Q5(0), -k0)}
    assert len(c.pieces) == 2 and len(c.shared_edges) == 1 and not c.fan
    h, k = counterexample(6).outer.vertices[1].x, counterexample(6).outer.vertices[2].y
    assert (h, k) == (field(3)(3, 1), field(3)(3, -1))
    with pytest.raises(ConstraintError):
        counterexample(4)


def test_fan_subdivide_examples():
    assert fan_subdivide(QUADRANT_FAN, 4) == list(QUADRANT_FAN)
    six = fan_subdivide(QUADRANT_FAN, 6)
    assert six == [E1, E1 + E2, E2, -E1, -E1 - E2, -E2]
    assert all(det(six[i], six[(i + 1) % 6]) == 1 for i in range(6))
    assert (E1 + E2).is_primitive() and det(E1, E1 + E2) == det(E1 + E2, E2) == 1
    for target in (8, 10, 16, 30):
        rays = fan_subdivide(QUADRANT_FAN, target)
        assert len(rays) == target and all(r.is_primitive() for r in rays)
        assert all(det(rays[i], rays[(i + 1) % target]) == 1 for i in range(target))
    with pytest.raises(DomainError):
        fan_subdivide(QUADRANT_FAN, 2)
    with pytest.raises(DomainError):
        fan_subdivide(QUADRANT_FAN, 7)


def test_assemble_rhombus(h0k0):
    h0, k0 = h0k0
    a = assemble(seed_data(4))
    edges = canonical_edges(a.outer)
    corners = {s.p for s, _ in edges}
    assert corners == {Point(h0, Q5(0)), Point(Q5(0), k0), Point(-h0, Q5(0)), Point(Q5(0), -k0)}


def _shape_counts(a):
    tri = sum(1 for p in a.pieces if len(canonical_edges(p)) == 3)
    return tri, len(a.pieces) - tri


def test_assemble_step_examples():
    a6 = assemble(seed_data(6))
    assert _shape_counts(a6) == (2, 2) and len(canonical_edges(a6.outer)) == 6
    a7 = assemble(seed_data(7))
    assert _shape_counts(a7) == (1, 3) and len(canonical_edges(a7.outer)) == 7
    a9 = assemble(seed_data(9))
    assert _shape_counts(a9) == (3, 3) and len(canonical_edges(a9.outer)) == 9


def test_invalid_sector_data():
    with pytest.raises(ConstraintError, match="det"):
        SectorData((SectorDatum(E1, Label.H), SectorDatum(LatticeVector(1, 2), Label.K),
                    SectorDatum(-E1, Label.H), SectorDatum(-E2, Label.K)))
    with pytest.raises(ConstraintError, match="alternate"):
        SectorData((SectorDatum(E1, Label.H), SectorDatum(E2, Label.H),
                    SectorDatum(-E1, Label.K), SectorDatum(-E2, Label.K)))
    with pytest.raises(ConstraintError):
        SectorDatum(LatticeVector(2, 0), Label.H)
    with pytest.raises(ConstraintError):
        SectorDatum(E1, Label.H, -1)


def test_refine_step0():
    base = seed_data(4)
    r = refine_step0(base, 0, 1)
    assert len(r) == 6
    assert len(canonical_edges(assemble(r).outer)) == 8
    rays = [e.ray for e in r.entries]
    assert all(det(rays[i], rays[(i + 1) % 6]) == 1 for i in range(6))
    # inserted value takes the opposite label with a strict offset
    assert r.entries[1].label is Label.K and r.entries[1].offset == 1
    assert len(canonical_edges(assemble(refine_step0(r, 3, 2)).outer)) == 12
    with pytest.raises(ConstraintError):
        refine_step0(base, 0, 0)


@pytest.mark.parametrize("n", [4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 17, 21])
def test_seed_data_edge_counts(n):
    a = assemble(seed_data(n))
    edges = canonical_edges(a.outer)
    assert len(edges) == n
    assert all(c is SlopeClass.IRRATIONAL for _, c in edges)
    assert validate_simple(a.outer).ok
    assert is_star_shaped(a.outer, point(0, 0, a.context))
    assert sum((area(p) for p in a.pieces), Q5(0)) == area(a.outer)


def test_seed_13_is_refined_nonagon_seed():
    assert seed_data(13) == refine_step0(seed_data(9), 0, 1)


@pytest.mark.parametrize("n", [3, 5, 2, 1])
def test_seed_data_unsupported(n):
    with pytest.raises(DomainError):
        seed_data(n)


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_seed_vertex_data(n):
    d = seed_vertex_data(n)
    assert all(e.offset == 0 for e in d.entries)
    a = assemble(d)
    assert all(len(canonical_edges(p)) == 3 for p in a.pieces)
    edges = canonical_edges(a.outer)
    assert len(edges) == n
    assert all(s.p.is_irrational() for s, _ in edges)


def test_seed_vertex_hexagon(h0k0):
    h0, k0 = h0k0
    a = assemble(seed_vertex_data(6))
    corners = [s.p for s, _ in canonical_edges(a.outer)]
    expected = [v.scaled_point(c) for v, c in zip(
        [E1, E1 + E2, E2, -E1, -E1 - E2, -E2], [h0, k0] * 3)]
    assert set(corners) == set(expected)


def test_seed_vertex_data_parity():
    with pytest.raises(DomainError):
        seed_vertex_data(3)
