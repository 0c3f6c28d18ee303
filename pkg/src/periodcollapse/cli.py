"""Command-line interface.

Exit codes: 0 success, 1 constraint or validation failure, 2 parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import constructions as C
from .counting import count, count_bruteforce
from .ehrhart import (DEFAULT_DEGREE, DEFAULT_P_MAX, DEFAULT_T_MAX, detect_quasi,
                      fit_polynomial, sample_series, verify_collapse)
from .errors import ParseError, PeriodCollapseError
from .geometry import area, canonical_edges, validate_simple
from .scene import emit_csv, format_fan_data, format_scene, parse_csv, parse_scene
from .svg import emit_svg

EXIT_OK, EXIT_INVALID, EXIT_PARSE = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _outer(target):
    return target.outer if isinstance(target, C.AssembledPolygon) else target


def cmd_construct(args) -> int:
    scene = parse_scene(_read(args.scene))
    target = scene.build()
    poly = _outer(target)
    report = validate_simple(poly)
    edges = canonical_edges(poly)
    lines = [format_scene(scene).rstrip("\n")]
    lines.append(f"# vertices: {len(poly)}")
    lines.append(f"# canonical edges: {len(edges)} ({', '.join(c.value for _, c in edges)})")
    lines.append(f"# area: {area(poly)}")
    lines.append(f"# simple: {'ok' if report.ok else '; '.join(report.defects)}")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_count(args) -> int:
    target = parse_scene(_read(args.scene)).build()
    rows = []
    for t in args.t:
        r = count_bruteforce(_outer(target), t) if args.bruteforce else count(target, t)
        rows.append(f"{r.t},{r.count}")
    _write("t,count\n" + "\n".join(rows) + "\n", args.out)
    return EXIT_OK


def cmd_series(args) -> int:
    target = parse_scene(_read(args.scene)).build()
    _write(emit_csv(sample_series(target, args.t_max)), args.out)
    return EXIT_OK


def cmd_fit(args) -> int:
    text = _read(args.input)
    if text.lstrip().startswith("{"):
        series = sample_series(parse_scene(text).build(), args.t_max)
    else:
        series = parse_csv(text)
    lines = []
    poly = fit_polynomial(series, args.degree)
    lines.append(f"polynomial fit (degree {args.degree}): "
                 + (str(poly) if poly else f"none; first violation at t = {poly.t}"))
    if len(series) >= (args.degree + 2) * args.p_max:
        lines += detect_quasi(series, args.degree, args.p_max).lines()
    else:
        lines.append(f"quasi-polynomial search skipped: need t_max >= {(args.degree + 2) * args.p_max}")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    scene = parse_scene(_read(args.scene))
    target = scene.build()
    report = verify_collapse(target, args.t_max, args.p_max, args.degree, scene.closed_form(target))
    _write(f"kind: {scene.kind}\n" + str(report) + "\n", args.out)
    return EXIT_INVALID if report.closed_form_match is False else EXIT_OK


def cmd_seed(args) -> int:
    if args.edges is not None:
        data = C.seed_data(args.edges, args.beta)
    else:
        data = C.seed_vertex_data(args.vertices, args.beta)
    _write(format_fan_data(data), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    target = parse_scene(_read(args.scene)).build()
    _write(emit_svg(target, args.t), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="periodcollapse",
                                     description="Exact Ehrhart counts of irrational polygons.")
    sub = parser.add_subparsers(dest="command", required=True)

    def scene_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("scene", help="scene file, or - for stdin")
        p.add_argument("--out", help="write output here instead of stdout")
        p.set_defaults(fn=fn)
        return p

    scene_cmd("construct", cmd_construct, "normalize and validate a scene")
    p = scene_cmd("count", cmd_count, "count lattice points of t * P")
    p.add_argument("--t", type=int, nargs="+", default=[1])
    p.add_argument("--bruteforce", action="store_true", help="use the reference counter")
    p = scene_cmd("series", cmd_series, "CSV series for t = 1..t_max")
    p.add_argument("--t-max", type=int, default=DEFAULT_T_MAX)

    p = sub.add_parser("fit", help="fit a polynomial / quasi-polynomial to a CSV series or scene")
    p.add_argument("input", help="CSV series or scene file, or -")
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    p.add_argument("--p-max", type=int, default=DEFAULT_P_MAX)
    p.add_argument("--t-max", type=int, default=DEFAULT_T_MAX)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_fit)

    p = scene_cmd("verify", cmd_verify, "full period-collapse report")
    p.add_argument("--t-max", type=int, default=DEFAULT_T_MAX)
    p.add_argument("--p-max", type=int, default=DEFAULT_P_MAX)
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)

    p = sub.add_parser("seed", help="emit fan data with a given number of edges or vertices")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--edges", type=int)
    g.add_argument("--vertices", type=int)
    p.add_argument("--beta", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_seed)

    p = scene_cmd("render", cmd_render, "SVG drawing of t * P with its lattice points")
    p.add_argument("--t", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PeriodCollapseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
