"""Ehrhart series, exact (quasi-)polynomial fitting and closed forms.

All fitting solves Vandermonde systems over the rationals and then checks
every remaining sample exactly.  A negative quasi-polynomial verdict only
means that no period up to ``p_max`` fits the sampled range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Mapping, Sequence, Union

from .constructions import AssembledPolygon, CGLSParams
from .counting import count, count_bruteforce
from .errors import DomainError
from .field import QuadraticNumber
from .geometry import Polygon, area, canonical_polygon

Target = Union[Polygon, AssembledPolygon]

DEFAULT_T_MAX = 36
DEFAULT_P_MAX = 6
DEFAULT_DEGREE = 2


@dataclass(frozen=True)
class EhrhartSeries:
    values: tuple[int, ...]
    source: str = ""

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise DomainError("lattice-point counts are nonnegative")

    @property
    def samples(self) -> list[tuple[int, int]]:
        return list(enumerate(self.values, start=1))

    @property
    def t_max(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, t: int) -> int:
        """Value at dilation ``t`` (1-based)."""
        if t < 1:
            raise IndexError(t)
        return self.values[t - 1]


def sample_series(target: Target, t_max: int, source: str = "", audit: bool = True) -> EhrhartSeries:
    """Counts for ``t = 1..t_max`` via the fastest valid counter.

    With ``audit`` the values at ``t = 1`` and ``t = t_max`` are recomputed by
    brute force and any disagreement raises ``AssertionError``.
    """
    if not isinstance(t_max, int) or t_max < 3:
        raise DomainError(f"t_max must be an integer >= 3, got {t_max!r}")
    values = [count(target, t).count for t in range(1, t_max + 1)]
    if audit:
        poly = target.outer if isinstance(target, AssembledPolygon) else target
        for t in {1, t_max}:
            ref = count_bruteforce(poly, t).count
            if ref != values[t - 1]:
                raise AssertionError(f"fast count {values[t - 1]} != brute force {ref} at t = {t}")
    return EhrhartSeries(tuple(values), source)


# -- exact fitting -------------------------------------------------------------

def solve_rational(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination over Q for a square nonsingular system."""
    n = len(matrix)
    rows = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise DomainError("singular system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


@dataclass(frozen=True)
class Polynomial:
    """Coefficients from the highest degree down: ``(a_n, ..., a_1, a_0)``."""

    coefficients: tuple[Fraction, ...]

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in self.coefficients:
            acc = acc * t + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[0]

    @property
    def constant(self) -> Fraction:
        return self.coefficients[-1]

    def __str__(self):
        terms = []
        for power, c in zip(range(self.degree, -1, -1), self.coefficients):
            if c == 0:
                continue
            mono = "" if power == 0 else ("t" if power == 1 else f"t^{power}")
            coef = str(c) if (mono == "" or c != 1) else ""
            terms.append(f"{coef}{'*' if coef and mono else ''}{mono}")
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class NoFit:
    """First sample ``(t, value)`` disagreeing with the interpolant."""

    t: int
    value: int
    predicted: Fraction

    def __bool__(self):
        return False


def _fit_points(points: Sequence[tuple[int, int]], degree: int) -> Polynomial | NoFit:
    head = points[: degree + 1]
    matrix = [[Fraction(t) ** (degree - j) for j in range(degree + 1)] for t, _ in head]
    poly = Polynomial(tuple(solve_rational(matrix, [Fraction(v) for _, v in head])))
    for t, v in points[degree + 1:]:
        if poly(t) != v:
            return NoFit(t, v, poly(t))
    return poly


def fit_polynomial(series: EhrhartSeries | Sequence[int], degree: int = DEFAULT_DEGREE) -> Polynomial | NoFit:
    """Interpolate the first ``degree + 1`` samples and verify the rest."""
    values = series.values if isinstance(series, EhrhartSeries) else tuple(series)
    if not isinstance(degree, int) or not 0 <= degree <= 3:
        raise DomainError(f"degree must be in 0..3, got {degree!r}")
    if len(values) < degree + 2:
        raise DomainError(f"need at least {degree + 2} samples to fit and check degree {degree}")
    return _fit_points(list(enumerate(values, start=1)), degree)


@dataclass(frozen=True)
class QuasiPolynomial:
    """``classes[r]`` is the polynomial used at ``t`` with ``t % period == r``."""

    period: int
    classes: tuple[Polynomial, ...]

    def __call__(self, t: int) -> Fraction:
        return self.classes[t % self.period](t)

    @property
    def is_polynomial(self) -> bool:
        return self.period == 1


@dataclass(frozen=True)
class CollapseReport:
    verdict: str
    fitted: QuasiPolynomial | None
    t_range: tuple[int, int]
    p_max: int
    degree: int
    closed_form_match: bool | None = None
    mismatches: tuple[tuple[int, int, int], ...] = ()
    non_integral: bool | None = None
    leading_equals_area: bool | None = None
    series: EhrhartSeries | None = dc_field(default=None, repr=False)

    @property
    def period(self) -> int | None:
        return self.fitted.period if self.fitted else None

    @property
    def is_polynomial(self) -> bool:
        return self.verdict == "polynomial"

    @property
    def period_collapse(self) -> bool:
        return bool(self.is_polynomial and self.non_integral)

    def lines(self) -> list[str]:
        lo, hi = self.t_range
        out = [f"verdict: {self.verdict}"]
        if self.verdict.startswith("no-fit"):
            out.append(f"note: bounded search only; no quasi-polynomial of degree <= {self.degree} "
                       f"and period <= {self.p_max} matches t = {lo}..{hi}; this is evidence, not a proof")
        if self.fitted is not None:
            out.append(f"period: {self.fitted.period}")
            for r, poly in enumerate(self.fitted.classes):
                out.append(f"class {r}: {poly}")
        out.append(f"checked: t = {lo}..{hi}")
        if self.non_integral is not None:
            out.append(f"non-integral vertices: {'yes' if self.non_integral else 'no'}")
        if self.leading_equals_area is not None:
            out.append(f"leading coefficient equals area: {'yes' if self.leading_equals_area else 'no'}")
        if self.closed_form_match is not None:
            out.append(f"closed form: {'match' if self.closed_form_match else 'MISMATCH'}")
            for t, got, want in self.mismatches:
                out.append(f"  t = {t}: count {got}, closed form {want}")
        if self.verdict == "polynomial" and self.non_integral:
            out.append("period collapse: yes")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def detect_quasi(series: EhrhartSeries, degree: int = DEFAULT_DEGREE, p_max: int = DEFAULT_P_MAX) -> CollapseReport:
    """Smallest period ``p <= p_max`` whose residue classes all fit exactly."""
    if not isinstance(p_max, int) or p_max < 1:
        raise DomainError(f"p_max must be a positive integer, got {p_max!r}")
    if len(series) < (degree + 2) * p_max:
        raise DomainError(
            f"{len(series)} samples cannot determine period {p_max} at degree {degree}; "
            f"need t_max >= {(degree + 2) * p_max}"
        )
    samples = series.samples
    for p in range(1, p_max + 1):
        classes = []
        for r in range(p):
            fit = _fit_points([s for s in samples if s[0] % p == r], degree)
            if not fit:
                break
            classes.append(fit)
        else:
            qp = QuasiPolynomial(p, tuple(classes))
            verdict = "polynomial" if p == 1 else f"quasi-polynomial({p})"
            return CollapseReport(verdict, qp, (1, len(series)), p_max, degree, series=series)
    return CollapseReport(f"no-fit-up-to({p_max})", None, (1, len(series)), p_max, degree, series=series)


# -- closed forms ------------------------------------------------------------------

def _cgls(params: Mapping, t: int) -> Fraction:
    alpha, beta = params["alpha"], params["beta"]
    return Fraction(beta, 2 * alpha) * t * t + Fraction(beta, 2) * t + 1


def _pyramid(params: Mapping, t: int) -> Fraction:
    n = params["n"]
    return Fraction(n, 2) * t * t + Fraction(n, 2) * t + 1


def _counterexample(params: Mapping, t: int) -> int:
    beta = params["beta"]
    h = params.get("h") or CGLSParams(1, beta).legs()[0]
    return beta * t * t + beta * t - math.floor(h * t) + 1


def _fan_edges(params: Mapping, t: int) -> int:
    """Lattice points on the ray edges: ``(n_total + (h0 + k0) k) t + k``."""
    k, n_total = params["k"], params["n_total"]
    s = params.get("beta", 5)
    return (n_total + s * k) * t + k


def _fan(params: Mapping, t: int) -> Fraction:
    """Sum of quadrilateral forms over the sectors, minus ray edges, plus the origin."""
    sums = params["sector_sums"]
    total = sum(_pyramid({"n": n}, t) for n in sums)
    return total - _fan_edges(params, t) + 1


CLOSED_FORMS: dict[str, Callable[[Mapping, int], Fraction | int]] = {
    "cgls": _cgls,
    "quad": lambda params, t: _pyramid({"n": params["n"]}, t),
    "pyramid": _pyramid,
    "counterexample": _counterexample,
    "fan-edges": _fan_edges,
    "fan": _fan,
}


def closed_form(kind: str, params: Mapping, t: int) -> int:
    """Evaluate one of the closed-form counts exactly.

    ``cgls`` takes ``alpha, beta``; ``quad`` and ``pyramid`` take the integer
    ``n = h + k`` (base length); ``counterexample`` takes ``beta``;
    ``fan-edges`` takes ``k, n_total`` and optional ``beta``; ``fan`` also
    needs ``sector_sums``, the integers ``c_i + c_{i+1}``.
    """
    try:
        fn = CLOSED_FORMS[kind]
    except KeyError:
        raise DomainError(f"unknown closed-form kind {kind!r}; known: {sorted(CLOSED_FORMS)}") from None
    if not isinstance(t, int) or t < 1:
        raise DomainError(f"t must be a positive integer, got {t!r}")
    value = Fraction(fn(params, t))
    if value.denominator != 1:
        raise DomainError(f"closed form {kind} is not integral at t = {t}: {value}")
    return int(value)


def fan_closed_form_params(a: AssembledPolygon) -> dict:
    """Parameters of the ``fan`` closed form for an assembled fan."""
    if not a.fan or a.data is None:
        raise DomainError("closed form needs an assembly built from sector data")
    cs = a.data.values()
    n = len(cs)
    sums = [int((cs[i] + cs[(i + 1) % n]).a) for i in range(n)]
    return {"k": n // 2, "n_total": a.n_total, "beta": a.data.beta, "sector_sums": sums}


def _non_integral(target: Target) -> bool:
    poly = target.outer if isinstance(target, AssembledPolygon) else target
    return not canonical_polygon(poly).is_integral()


def verify_collapse(target: Target, t_max: int = DEFAULT_T_MAX, p_max: int = DEFAULT_P_MAX,
                    degree: int = DEFAULT_DEGREE, closed: tuple[str, Mapping] | None = None,
                    series: EhrhartSeries | None = None) -> CollapseReport:
    """Sample, fit, and compare with a closed form when one is supplied.

    The leading coefficient of a polynomial fit is compared with the exact
    area of the region.
    """
    if series is None:
        series = sample_series(target, t_max)
    report = detect_quasi(series, degree, p_max)
    poly = target.outer if isinstance(target, AssembledPolygon) else target
    extra = {"non_integral": _non_integral(target)}
    if report.is_polynomial and degree == 2:
        a = area(poly)
        extra["leading_equals_area"] = isinstance(a, QuadraticNumber) and a == report.fitted.classes[0].leading
    if closed is not None:
        kind, params = closed
        mism = tuple((t, v, closed_form(kind, params, t))
                     for t, v in series.samples if closed_form(kind, params, t) != v)
        extra["closed_form_match"] = not mism
        extra["mismatches"] = mism
    return CollapseReport(report.verdict, report.fitted, report.t_range, p_max, degree,
                          series=series, **extra)
