from fractions import Fraction

import pytest

from periodcollapse.constructions import base_pair
from periodcollapse.field import field
from periodcollapse.geometry import Polygon, contains, dilate, point


@pytest.fixture(scope="session")
def Q5():
    return field(5)


@pytest.fixture(scope="session")
def h0k0():
    return base_pair(5)


def poly(ctx, *coords):
    return Polygon(point(Fraction(x), Fraction(y), ctx) for x, y in coords)


def naive_count(p, t):
    """Lattice count through the field-level contains(); independent of LatticeTester."""
    import math

    q = dilate(p, t)
    xs = [v.x for v in q.vertices]
    ys = [v.y for v in q.vertices]
    ctx = q.context
    return sum(
        contains(q, point(x, y, ctx))
        for x in range(math.ceil(min(xs)), math.floor(max(xs)) + 1)
        for y in range(math.ceil(min(ys)), math.floor(max(ys)) + 1)
    )


def random_convex_polygon(rng, ctx, spread=4):
    """Convex hull of a few random points a + b*sqrt(d) with small rational a, b."""
    from periodcollapse.geometry import Point, convex_hull

    while True:
        pts = []
        for _ in range(rng.randint(3, 7)):
            coords = []
            for _ in range(2):
                a = Fraction(rng.randint(-spread * 4, spread * 4), rng.randint(1, 4))
                b = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                coords.append(ctx(a, b))
            pts.append(Point(*coords))
        hull = convex_hull(pts)
        if len(hull) >= 3:
            return Polygon(hull)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
