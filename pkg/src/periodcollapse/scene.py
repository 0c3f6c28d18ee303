"""Scene files, fan data files and CSV series.

Scenes are JSON objects.  Every coordinate is a string literal in the grammar
of :func:`~periodcollapse.field.parse_number` (``"5/2+1/2*s5"``); floats are
rejected.  Kinds and their keys::

    quad            d, h, k
    cut_and_paste   d, h, k
    pyramid         d, a, b
    cgls            alpha, beta
    counterexample  beta
    fan             beta, entries: [{"ray": [u, v], "base": "H"|"K", "offset": n}, ...]
    polygon         d, vertices: [[x, y], ...]

A fan data file is a ``fan`` scene without the ``kind`` key.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Union

from . import constructions as C
from .errors import ConstraintError, ContextMismatchError, DomainError, ParseError
from .ehrhart import EhrhartSeries, fan_closed_form_params
from .field import FieldContext, QuadraticNumber, field, format_number, parse_number
from .geometry import LatticeVector, Point, Polygon

Target = Union[Polygon, "C.AssembledPolygon"]

KINDS = ("quad", "cut_and_paste", "pyramid", "cgls", "counterexample", "fan", "polygon")
_KEYS = {
    "quad": ("d", "h", "k"),
    "cut_and_paste": ("d", "h", "k"),
    "pyramid": ("d", "a", "b"),
    "cgls": ("alpha", "beta"),
    "counterexample": ("beta",),
    "fan": ("beta", "entries"),
    "polygon": ("d", "vertices"),
}


@dataclass(frozen=True)
class Scene:
    """A parsed scene: its kind and normalized parameters.

    Number-valued parameters hold :class:`QuadraticNumber`; ``fan`` holds a
    :class:`~periodcollapse.constructions.SectorData` under ``data``.
    """

    kind: str
    params: tuple[tuple[str, Any], ...]

    def __getitem__(self, key):
        return dict(self.params)[key]

    def build(self) -> Target:
        p = dict(self.params)
        k = self.kind
        if k == "quad":
            return C.quad_Q(p["h"], p["k"])
        if k == "cut_and_paste":
            return C.cut_and_paste(p["h"], p["k"]).glued
        if k == "pyramid":
            return C.pyramid(p["a"], p["b"])
        if k == "cgls":
            return C.cgls_triangle(C.CGLSParams(p["alpha"], p["beta"]))
        if k == "counterexample":
            return C.counterexample(p["beta"])
        if k == "fan":
            return C.assemble(p["data"])
        if k == "polygon":
            return Polygon(p["vertices"])
        raise DomainError(f"unknown scene kind {k!r}")

    def closed_form(self, target: Target | None = None) -> tuple[str, dict] | None:
        """``(kind, params)`` for :func:`~periodcollapse.ehrhart.closed_form`, if known."""
        p = dict(self.params)
        if self.kind in ("quad", "cut_and_paste"):
            return "quad", {"n": int((p["h"] + p["k"]).a)}
        if self.kind == "pyramid":
            return "pyramid", {"n": int((p["b"] - p["a"]).a)}
        if self.kind == "cgls":
            return "cgls", {"alpha": p["alpha"], "beta": p["beta"]}
        if self.kind == "counterexample":
            return "counterexample", {"beta": p["beta"]}
        if self.kind == "fan":
            return "fan", fan_closed_form_params(target if target is not None else self.build())
        return None


# -- helpers -------------------------------------------------------------------

def _require_int(obj: dict, key: str) -> int:
    v = obj.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{key!r} must be an integer, got {v!r}")
    return v


def _number(obj: dict, key: str, ctx: FieldContext) -> QuadraticNumber:
    if key not in obj:
        raise ParseError(f"missing key {key!r}")
    try:
        return parse_number(obj[key], ctx)
    except ParseError as exc:
        raise ParseError(f"in {key!r}: {exc}") from None


def _context(obj: dict) -> FieldContext:
    d = _require_int(obj, "d")
    try:
        return field(d)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def _loads(text: str) -> dict:
    try:
        obj = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(obj, dict):
        raise ParseError("scene must be a JSON object")
    return obj


def _reject_float(text):
    raise ParseError(f"float literal {text} is not allowed; write rationals as \"p/q\" strings")


def _sector_data(obj: dict) -> C.SectorData:
    beta = _require_int(obj, "beta")
    entries = obj.get("entries")
    if not isinstance(entries, list):
        raise ParseError("'entries' must be a list")
    out = []
    for i, e in enumerate(entries):
        if not isinstance(e, dict):
            raise ParseError(f"entry {i} must be an object")
        ray = e.get("ray")
        if (not isinstance(ray, list) or len(ray) != 2
                or not all(isinstance(c, int) and not isinstance(c, bool) for c in ray)):
            raise ParseError(f"entry {i}: 'ray' must be [u, v] with integer entries")
        base = e.get("base")
        if base not in ("H", "K"):
            raise ParseError(f"entry {i}: 'base' must be \"H\" or \"K\"")
        offset = _require_int(e, "offset") if "offset" in e else 0
        out.append(C.SectorDatum(LatticeVector(*ray), C.Label(base), offset))
    return C.SectorData(tuple(out), beta)


# -- scenes ----------------------------------------------------------------------

def parse_scene(text: str, validate: bool = True) -> Scene:
    """Parse scene text; with ``validate`` the construction is built once.

    Raises :class:`ParseError` for syntax problems and
    :class:`ConstraintError` when the construction's preconditions fail.
    """
    obj = _loads(text)
    kind = obj.get("kind", "fan" if "entries" in obj else None)
    if kind not in KINDS:
        raise ParseError(f"unknown or missing kind {kind!r}; expected one of {', '.join(KINDS)}")
    unknown = set(obj) - set(_KEYS[kind]) - {"kind"}
    if unknown:
        raise ParseError(f"unexpected keys for kind {kind!r}: {sorted(unknown)}")
    params: dict[str, Any]
    try:
        if kind in ("quad", "cut_and_paste"):
            ctx = _context(obj)
            params = {"h": _number(obj, "h", ctx), "k": _number(obj, "k", ctx)}
        elif kind == "pyramid":
            ctx = _context(obj)
            params = {"a": _number(obj, "a", ctx), "b": _number(obj, "b", ctx)}
        elif kind == "cgls":
            params = {"alpha": _require_int(obj, "alpha"), "beta": _require_int(obj, "beta")}
        elif kind == "counterexample":
            params = {"beta": _require_int(obj, "beta")}
        elif kind == "fan":
            params = {"data": _sector_data(obj)}
        else:
            ctx = _context(obj)
            verts = obj.get("vertices")
            if not isinstance(verts, list) or not all(isinstance(v, list) and len(v) == 2 for v in verts):
                raise ParseError("'vertices' must be a list of [x, y] pairs")
            params = {"vertices": tuple(Point(parse_number(x, ctx), parse_number(y, ctx)) for x, y in verts)}
    except ContextMismatchError as exc:
        raise ConstraintError(str(exc)) from None
    scene = Scene(kind, tuple(sorted(params.items())))
    if validate:
        scene.build()
    return scene


def scene_to_dict(scene: Scene) -> dict:
    p = dict(scene.params)
    out: dict[str, Any] = {"kind": scene.kind}
    if scene.kind in ("quad", "cut_and_paste", "pyramid"):
        nums = [p[k] for k in _KEYS[scene.kind][1:]]
        out["d"] = nums[0].d
        for key, x in zip(_KEYS[scene.kind][1:], nums):
            out[key] = format_number(x)
    elif scene.kind in ("cgls", "counterexample"):
        out.update(p)
    elif scene.kind == "fan":
        out.update(fan_data_to_dict(p["data"]))
    else:
        vs = p["vertices"]
        out["d"] = vs[0].context.d
        out["vertices"] = [[format_number(v.x), format_number(v.y)] for v in vs]
    return out


def format_scene(scene: Scene) -> str:
    return json.dumps(scene_to_dict(scene), indent=2) + "\n"


def polygon_scene(p: Polygon) -> Scene:
    return Scene("polygon", (("vertices", p.vertices),))


# -- fan data files ------------------------------------------------------------------

def fan_data_to_dict(data: C.SectorData) -> dict:
    return {
        "beta": data.beta,
        "entries": [{"ray": [e.ray.u, e.ray.v], "base": e.label.value, "offset": e.offset}
                    for e in data.entries],
    }


def format_fan_data(data: C.SectorData) -> str:
    return json.dumps(fan_data_to_dict(data), indent=2) + "\n"


def parse_fan_data(text: str) -> C.SectorData:
    obj = _loads(text)
    if obj.get("kind", "fan") != "fan":
        raise ParseError("not a fan data file")
    return _sector_data(obj)


# -- CSV -------------------------------------------------------------------------------

def emit_csv(series: EhrhartSeries) -> str:
    if not len(series):
        raise DomainError("cannot emit an empty series")
    return "t,count\n" + "".join(f"{t},{v}\n" for t, v in series.samples)


def parse_csv(text: str) -> EhrhartSeries:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [c.strip() for c in rows[0]] != ["t", "count"]:
        raise ParseError("CSV must start with the header 't,count'", 1, 1)
    values = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        try:
            t, v = (int(c) for c in row)
        except ValueError:
            raise ParseError(f"row {row!r} is not two integers", lineno, 1) from None
        if t != len(values) + 1:
            raise ParseError(f"expected t = {len(values) + 1}, got {t}", lineno, 1)
        values.append(v)
    if not values:
        raise ParseError("CSV has no samples")
    return EhrhartSeries(tuple(values))
