"""Command-line front end.

Exit codes: 0 success, 1 refuted claim or invalid input, 2 hypothesis
violation (no ordinary point is guaranteed), 3 usage error.
"""

from __future__ import annotations

import argparse
import gc
import json
import statistics
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Optional, Sequence

from .arrangement2d import find_ordinary_point_2d
from .errors import HypothesisError, OrdinaryError
from .generators import KINDS, GenSpec, generate
from .geometry import COLORS, Point2, format_scalar
from .hyperplanes import NoIntersectionPoint, find_ordinary_point_nd
from .io import (
    HYPERPLANES,
    LINES,
    PSEUDOLINES,
    arrangement_kind,
    dumps_arrangement,
    load_arrangement,
    parse_point,
    point_doc,
)
from .oracle import incidences, rank
from .pseudolines import (
    embed_lines,
    find_monochromatic,
    find_ordinary_pseudoline,
    unshear,
    validate_arrangement,
)
from .render import render_svg

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_HYPOTHESIS = 2
EXIT_USAGE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunReport:
    """What one command did; ``to_json`` gives the documented schema."""

    command: str
    input: dict
    result: Optional[dict] = None
    timings_ns: dict = field(default_factory=dict)
    trace: Optional[list] = None
    verification: Optional[dict] = None
    error: Optional[dict] = None

    def to_json(self) -> dict:
        return asdict(self)


class _Clock:
    """Per-stage wall time in integer nanoseconds."""

    def __init__(self, timings: dict):
        self.timings = timings
        self.start = time.perf_counter_ns()

    def stage(self, name: str, fn, *args, **kwargs):
        t0 = time.perf_counter_ns()
        try:
            return fn(*args, **kwargs)
        finally:
            self.timings[name] = time.perf_counter_ns() - t0

    def close(self) -> None:
        self.timings["total"] = time.perf_counter_ns() - self.start


def _input_summary(path: str, kind: str, elements: Sequence) -> dict:
    d = elements[0].dim if kind == HYPERPLANES and elements else 2
    return {"file": path, "kind": kind, "n": len(elements), "d": d}


def _require(kind: str, allowed: Sequence[str], command: str) -> None:
    if kind not in allowed:
        raise ValueError(f"{command} takes {' or '.join(allowed)}, not {kind}")


def _fmt_point(p) -> str:
    return "(" + ", ".join(format_scalar(x) for x in p) + ")"


def _verification(elements, point, expect: int) -> dict:
    inc = incidences(elements, point)
    return {"incidences": inc, "confirmed": len(inc) == expect}


# --- algorithm commands ------------------------------------------------------


def _run_ordinary2d(args, report, clock, kind, elements):
    _require(kind, [LINES], "ordinary2d")
    res = clock.stage("search", find_ordinary_point_2d, elements)
    report.result = {
        "point": point_doc(res.point),
        "witnesses": list(res.witnesses),
        "provenance": res.provenance,
    }
    report.verification = clock.stage("verify", _verification, elements, res.point, 2)
    return f"point {_fmt_point(res.point)} on lines {res.witnesses[0]}, {res.witnesses[1]} [{res.provenance}]"


def _run_ordinary_nd(args, report, clock, kind, elements):
    _require(kind, [HYPERPLANES], "ordinary-nd")
    res = clock.stage("search", find_ordinary_point_nd, elements)
    if isinstance(res, NoIntersectionPoint):
        report.result = {"verdict": "no_intersection_point", "rank": res.rank, "d": res.dim}
        raise _NoPoint(f"no intersection point: normals span only {res.rank} of {res.dim} dimensions")
    d = elements[0].dim
    report.result = {
        "point": point_doc(res.point),
        "witnesses": list(res.witnesses),
        "provenance": res.provenance,
        "skipped_traces": res.skipped_traces,
    }
    report.verification = clock.stage("verify", _verification, elements, res.point, d)
    ws = ", ".join(map(str, res.witnesses))
    return f"point {_fmt_point(res.point)} on hyperplanes {ws} [{res.provenance}]"


def _as_pseudolines(kind, elements):
    """Pseudolines for the input plus the shear used to embed straight lines."""
    if kind == PSEUDOLINES:
        return elements, 0
    return embed_lines(elements)


def _validate(args, clock, ps):
    if args.validate:
        report = clock.stage("validate", validate_arrangement, ps)
        report.raise_if_invalid()


def _run_ordinary_pseudo(args, report, clock, kind, elements):
    _require(kind, [PSEUDOLINES, LINES], "ordinary-pseudo")
    ps, t = _as_pseudolines(kind, elements)
    _validate(args, clock, ps)
    point, wit, trace = clock.stage("search", find_ordinary_pseudoline, ps, validate=False)
    point = unshear(point, t)
    report.result = {"point": point_doc(point), "witnesses": list(wit), "steps": len(trace)}
    if args.trace:
        report.trace = [s.to_json() for s in trace]
    report.verification = clock.stage("verify", _verification, elements, point, 2)
    return f"point {_fmt_point(point)} on pseudolines {wit[0]}, {wit[1]} after {len(trace)} step(s)"


def _run_mono(args, report, clock, kind, elements):
    _require(kind, [PSEUDOLINES, LINES], "mono-pseudo")
    ps, t = _as_pseudolines(kind, elements)
    _validate(args, clock, ps)
    res = clock.stage("search", find_monochromatic, ps, validate=False)
    point = unshear(res.point, t)
    report.result = {"point": point_doc(point), "witnesses": list(res.witnesses), "color": res.color}
    if args.trace:
        report.trace = [s.to_json() for s in res.trace]
    inc = clock.stage("verify", incidences, elements, point)
    report.verification = {
        "incidences": inc,
        "confirmed": len(inc) >= 2 and all(elements[i].color == res.color for i in inc),
    }
    ws = ", ".join(map(str, res.witnesses))
    return f"point {_fmt_point(point)} color {res.color} on pseudolines {ws}"


class _NoPoint(HypothesisError):
    pass


# --- verify ------------------------------------------------------------------


def check_claim(kind: str, elements: Sequence, claim: dict) -> tuple[bool, str]:
    """Check a claimed result against the arrangement by brute force.

    ``claim`` is either a RunReport document or its ``result`` part.
    """
    if "result" in claim and isinstance(claim["result"], dict):
        claim = claim["result"]
    d = elements[0].dim if kind == HYPERPLANES else 2
    if claim.get("verdict") == "no_intersection_point":
        r = rank([h.normal for h in elements]) if kind == HYPERPLANES else rank([(l.a, l.b) for l in elements])
        if r < d:
            return True, f"normals have rank {r} < {d}"
        return False, f"normals have full rank {d}, so intersection points exist"
    if "point" not in claim:
        raise ValueError("claim has no 'point'")
    point = parse_point(claim["point"])
    if len(point) != d:
        return False, f"claimed point has {len(point)} coordinates, expected {d}"
    inc = incidences(elements, point)
    given = claim.get("witnesses")
    if given is not None and sorted(given) != inc:
        return False, f"incident elements are {inc}, claim lists {sorted(given)}"
    color = claim.get("color")
    if color is not None:
        if len(inc) < 2:
            return False, f"point lies on {len(inc)} element(s), not a crossing"
        colors = {elements[i].color for i in inc}
        if colors != {color}:
            return False, f"incident colors are {sorted(map(str, colors))}, not only {color}"
        return True, f"{len(inc)} {color} elements meet at the point"
    if len(inc) != d:
        return False, f"point lies on {len(inc)} element(s), expected exactly {d}"
    if kind == HYPERPLANES and rank([elements[i].normal for i in inc]) < d:
        return False, "the incident hyperplanes meet in more than a point"
    return True, f"exactly {d} elements through the point: {inc}"


def _cmd_verify(args, report, clock, kind, elements):
    with open(args.claim, encoding="utf-8") as f:
        claim = json.load(f)
    ok, why = clock.stage("verify", check_claim, kind, elements, claim)
    report.verification = {"confirmed": ok, "reason": why}
    if not ok:
        raise _Refuted(why)
    return f"confirmed: {why}"


class _Refuted(Exception):
    pass


# --- generate, render, bench -------------------------------------------------


def _spec_from_args(args, n: int) -> GenSpec:
    return GenSpec(
        kind=args.kind, n=n, d=args.d, seed=args.seed,
        max_bundle_size=args.max_bundle_size,
        parallel_family_count=args.parallel_families,
        color_bias=args.color_bias, pseudo=args.pseudo,
        empty_traces=args.empty_traces,
    )


def _cmd_generate(args) -> int:
    elements = generate(_spec_from_args(args, args.n))
    text = dumps_arrangement(elements)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _parse_highlight(text: str) -> Point2:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--highlight wants x,y, got {text!r}")
    try:
        return Point2(*parse_point(parts, "--highlight"))
    except ValueError as e:
        raise UsageError(str(e)) from None


def _cmd_render(args) -> int:
    highlight = _parse_highlight(args.highlight) if args.highlight else None
    kind, elements = load_arrangement(args.file)
    _require(kind, [LINES, PSEUDOLINES], "render")
    svg = render_svg(elements, highlight)
    with open(args.out, "w", encoding="utf-8") as f:
        f.write(svg + "\n")
    print(f"wrote {args.out}", file=sys.stderr)
    return EXIT_OK


def _bench_runner(elements, validate: bool):
    kind = arrangement_kind(elements)
    if kind == LINES:
        return find_ordinary_point_2d
    if kind == HYPERPLANES:
        return find_ordinary_point_nd
    if elements[0].color is not None:
        return lambda ps: find_monochromatic(ps, validate=validate)
    return lambda ps: find_ordinary_pseudoline(ps, validate=validate)


def time_median(fn, arg, repeats: int) -> tuple[int, list[int]]:
    """Median wall time in ns over ``repeats`` runs with the collector paused."""
    runs = []
    for _ in range(repeats):
        gc.collect()
        gc.disable()
        try:
            t0 = time.perf_counter_ns()
            fn(arg)
            runs.append(time.perf_counter_ns() - t0)
        finally:
            gc.enable()
    return int(statistics.median(runs)), runs


def _cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"--sizes wants a comma separated list of integers, got {args.sizes!r}") from None
    if not sizes or args.repeats < 1:
        raise UsageError("need at least one size and one repeat")
    rows = []
    prev = None
    for n in sizes:
        elements = generate(_spec_from_args(args, n))
        med, runs = time_median(_bench_runner(elements, args.validate), elements, args.repeats)
        rows.append({
            "n": n, "median_ns": med, "runs_ns": runs,
            "ratio": None if prev is None else med / prev,
        })
        prev = med
    if args.json:
        print(json.dumps({"kind": args.kind, "d": args.d, "seed": args.seed, "rows": rows}, indent=1))
    else:
        print(f"{'n':>8} {'median ms':>12} {'ratio':>7}")
        for r in rows:
            ratio = "" if r["ratio"] is None else f"{r['ratio']:.2f}"
            print(f"{r['n']:>8} {r['median_ns'] / 1e6:>12.3f} {ratio:>7}")
    return EXIT_OK


# --- plumbing ----------------------------------------------------------------

_RUNNERS = {
    "ordinary2d": _run_ordinary2d,
    "ordinary-nd": _run_ordinary_nd,
    "ordinary-pseudo": _run_ordinary_pseudo,
    "mono-pseudo": _run_mono,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--no-validate", dest="validate", action="store_false", default=argparse.SUPPRESS,
                        help="skip the O(n^2) pseudoline validation")
    common.add_argument("--trace", action="store_true", default=argparse.SUPPRESS,
                        help="include the triangle search steps")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a JSON run report")

    parser = _Parser(prog="ordinary", parents=[common],
                     description="Find ordinary and monochromatic intersection points.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name, what in [
        ("ordinary2d", "ordinary point of a line arrangement"),
        ("ordinary-nd", "ordinary point of a hyperplane arrangement"),
        ("ordinary-pseudo", "ordinary point of a pseudoline arrangement"),
        ("mono-pseudo", "monochromatic point of a two-colored pseudoline arrangement"),
    ]:
        p = sub.add_parser(name, parents=[common], help=what)
        p.add_argument("file")
    p = sub.add_parser("verify", parents=[common], help="check a claimed result by brute force")
    p.add_argument("file")
    p.add_argument("--claim", required=True, help="JSON file: a --json run report or just its \"result\" object")

    def gen_options(p):
        p.add_argument("--kind", required=True, choices=KINDS)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--d", type=int, default=2)
        p.add_argument("--max-bundle-size", type=int, default=2)
        p.add_argument("--parallel-families", type=int, default=0)
        p.add_argument("--color-bias", choices=COLORS)
        p.add_argument("--pseudo", action="store_true")
        p.add_argument("--empty-traces", type=int, default=0)

    p = sub.add_parser("generate", parents=[common], help="write a seeded arrangement as JSON")
    gen_options(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p = sub.add_parser("render", parents=[common], help="draw lines or pseudolines as SVG")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.add_argument("--highlight")
    p = sub.add_parser("bench", parents=[common], help="time a search over growing sizes")
    gen_options(p)
    p.add_argument("--sizes", required=True)
    p.add_argument("--repeats", type=int, default=5)
    return parser


def _error_doc(e: BaseException) -> dict:
    return {"type": type(e).__name__, "message": str(e)}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    args.validate = getattr(args, "validate", True)
    args.trace = getattr(args, "trace", False)
    args.json = getattr(args, "json", False)

    try:
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "render":
            return _cmd_render(args)
        if args.command == "bench":
            return _cmd_bench(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisError as e:
        print(f"hypothesis violated: {e}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (OrdinaryError, ValueError, KeyError, TypeError, OSError) as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID

    report = RunReport(args.command, {"file": args.file})
    clock = _Clock(report.timings_ns)
    code = EXIT_OK
    message = ""
    try:
        kind, elements = clock.stage("parse", load_arrangement, args.file)
        report.input = _input_summary(args.file, kind, elements)
        message = _RUNNERS[args.command](args, report, clock, kind, elements)
    except _Refuted as e:
        code, message = EXIT_INVALID, f"refuted: {e}"
        report.error = _error_doc(e)
    except HypothesisError as e:
        code, message = EXIT_HYPOTHESIS, f"hypothesis violated: {e}"
        report.error = _error_doc(e)
    except (OrdinaryError, ValueError, KeyError, TypeError, OSError) as e:
        code, message = EXIT_INVALID, f"invalid input: {e}"
        report.error = _error_doc(e)
    clock.close()

    if code == EXIT_OK and report.verification and not report.verification["confirmed"]:
        # the oracle disagrees with the search: report it rather than hide it
        code, message = EXIT_INVALID, f"oracle rejected the result: {message}"

    if args.json:
        print(json.dumps(report.to_json(), indent=1))
    elif code == EXIT_OK:
        print(message)
        if report.trace:
            for s in report.trace:
                print(json.dumps(s))
    if code != EXIT_OK:
        print(message, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
