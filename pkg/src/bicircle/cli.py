"""Command-line front end with exact JSON reports.

Every numeric value in a report is an exact rational string ("13", "-18",
"5/8"); nothing is ever serialized through floating point. Exit status is 0
on success, 1 on a domain error (the error name goes to stderr), and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .construction import (
    DEFAULT_Q_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    CaseFlag,
    ProbePoint,
    classify_case,
    construct_image,
    locus_x,
    run_oracle_fuzz,
    verify_concurrency,
)
from .errors import GeometryError
from .exact import INFINITY, ExtendedPoint, Line, Point2, format_rational, parse_rational
from .figures import RenderSpec, render_svg
from .scenario import ScenarioConfig, derive, parse_scenario, validate


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except GeometryError as exc:
        raise argparse.ArgumentTypeError(f"{type(exc).__name__}: {exc}")


def _q_samples(text: str) -> list[Fraction]:
    try:
        return [parse_rational(part) for part in text.split(",") if part.strip()]
    except GeometryError as exc:
        raise argparse.ArgumentTypeError(f"{type(exc).__name__}: {exc}")


def _encode_point(point: Point2) -> list[str]:
    return [format_rational(point.x), format_rational(point.y)]


def _encode_line(line: Line) -> list[str]:
    return [format_rational(line.a), format_rational(line.b), format_rational(line.c)]


def _encode_extended(value: ExtendedPoint) -> dict:
    if value.is_finite:
        return {"finite": _encode_point(value.point)}
    dx, dy = value.direction
    return {"atInfinity": [format_rational(dx), format_rational(dy)]}


def _encode_flags(flags) -> list[str]:
    return [flag.value for flag in CaseFlag if flag in flags]


def _scenario_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--a", type=_rational, help="half center distance")
    parser.add_argument("--r1", type=_rational, help="radius of the left circle")
    parser.add_argument("--r2", type=_rational, help="radius of the right circle")
    parser.add_argument(
        "--scenario",
        help="alternative to --a/--r1/--r2: 'a r1 r2' or JSON {\"a\": ..., \"r1\": ..., \"r2\": ...}",
    )


def _resolve_scenario(parser: argparse.ArgumentParser, args) -> ScenarioConfig:
    if args.scenario is not None:
        if not (args.a is None and args.r1 is None and args.r2 is None):
            parser.error("give either --scenario or --a/--r1/--r2, not both")
        try:
            return parse_scenario(args.scenario)
        except GeometryError as exc:
            parser.error(f"{type(exc).__name__}: {exc}")
    if args.a is None or args.r1 is None or args.r2 is None:
        parser.error("scenario required: --scenario, or all of --a, --r1, --r2")
    return ScenarioConfig(args.a, args.r1, args.r2)


def _probe_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=_rational, required=True, help="probe x-coordinate")
    parser.add_argument("--q", type=_rational, required=True, help="probe y-coordinate")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicircle",
        description="Exact two-circle chord construction: probe to image, locus, and figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="construct M, N and the image point for one probe")
    _scenario_args(compute)
    _probe_args(compute)

    locus = sub.add_parser("locus", help="abscissa of the image line for a probe line x = p")
    _scenario_args(locus)
    locus.add_argument("--p", type=_rational, required=True, help="probe line abscissa")

    classify = sub.add_parser("classify", help="degeneracy flags for a probe")
    _scenario_args(classify)
    _probe_args(classify)

    verify = sub.add_parser("verify", help="check that AM, DN and the radical axis concur")
    _scenario_args(verify)
    verify.add_argument(
        "--q-samples",
        type=_q_samples,
        default=list(DEFAULT_Q_SAMPLES),
        help='comma-separated nonzero q values (default "1,2,-3,1/7")',
    )

    fuzz = sub.add_parser("fuzz", help="random trials comparing the two image routes")
    fuzz.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    fuzz.add_argument("--seed", type=int, default=DEFAULT_SEED)

    render = sub.add_parser("render", help="write an SVG figure for one probe")
    _scenario_args(render)
    _probe_args(render)
    render.add_argument("--out", required=True, help="output SVG path")
    render.add_argument("--width", type=int, default=800)
    render.add_argument("--height", type=int, default=600)
    render.add_argument("--no-radical-axis", action="store_true")
    render.add_argument("--no-labels", action="store_true")
    render.add_argument("--clip", action="store_true",
                        help="bound the viewport by the circles and clip far points")
    return parser


def _scenario_report(cfg: ScenarioConfig) -> dict:
    return {
        "a": format_rational(cfg.a),
        "r1": format_rational(cfg.r1),
        "r2": format_rational(cfg.r2),
    }


def _run_compute(args) -> tuple[dict, int]:
    cfg = args.cfg
    ordering = validate(cfg)
    probe = ProbePoint(args.p, args.q)
    result = construct_image(derive(cfg), probe)
    return {
        "command": "compute",
        "scenario": _scenario_report(cfg),
        "ordering": ordering.value,
        "probe": {"p": format_rational(probe.p), "q": format_rational(probe.q)},
        "M": _encode_point(result.M),
        "N": _encode_point(result.N),
        "lineAM": _encode_line(result.line_am),
        "lineDN": _encode_line(result.line_dn),
        "Pprime": _encode_extended(result.p_prime),
        "classification": _encode_flags(result.flags),
    }, 0


def _run_locus(args) -> tuple[dict, int]:
    cfg = args.cfg
    value = locus_x(cfg, args.p)
    if value is INFINITY:
        encoded, fixed = "infinity", False
    else:
        encoded, fixed = format_rational(value), value == args.p
    return {
        "command": "locus",
        "scenario": _scenario_report(cfg),
        "p": format_rational(args.p),
        "pPrime": encoded,
        "fixedPoint": fixed,
    }, 0


def _run_classify(args) -> tuple[dict, int]:
    cfg = args.cfg
    flags = classify_case(cfg, ProbePoint(args.p, args.q))
    return {
        "command": "classify",
        "scenario": _scenario_report(cfg),
        "probe": {"p": format_rational(args.p), "q": format_rational(args.q)},
        "classification": _encode_flags(flags),
    }, 0


def _run_verify(args) -> tuple[dict, int]:
    cfg = args.cfg
    passed = verify_concurrency(cfg, args.q_samples)
    report = {
        "command": "verify",
        "scenario": _scenario_report(cfg),
        "p": format_rational(derive(cfg).radical_axis_x),
        "qSamples": [format_rational(q) for q in args.q_samples],
        "passed": passed,
    }
    return report, 0 if passed else 1


def _run_fuzz(args) -> tuple[dict, int]:
    report = run_oracle_fuzz(trials=args.trials, seed=args.seed)
    failures = [
        {
            "trial": failure.trial,
            "scenario": _scenario_report(failure.config),
            "probe": {
                "p": format_rational(failure.probe.p),
                "q": format_rational(failure.probe.q),
            },
            "geometric": _encode_extended(failure.geometric),
            "closedForm": _encode_extended(failure.closed_form),
        }
        for failure in report.failures
    ]
    encoded = {
        "command": "fuzz",
        "trials": report.trials,
        "seed": report.seed,
        "failures": len(failures),
        "failureDetails": failures,
    }
    return encoded, 0 if not failures else 1


def _run_render(args) -> tuple[dict, int]:
    cfg = args.cfg
    scene = derive(cfg)
    probe = ProbePoint(args.p, args.q)
    result = construct_image(scene, probe)
    spec = RenderSpec(
        scene=scene,
        probe=probe,
        result=result,
        width=args.width,
        height=args.height,
        show_radical_axis=not args.no_radical_axis,
        labels=not args.no_labels,
        clip=args.clip,
    )
    svg = render_svg(spec)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(svg)
    return {
        "command": "render",
        "out": args.out,
        "bytes": len(svg.encode("utf-8")),
        "Pprime": _encode_extended(result.p_prime),
    }, 0


_RUNNERS = {
    "compute": _run_compute,
    "locus": _run_locus,
    "classify": _run_classify,
    "verify": _run_verify,
    "fuzz": _run_fuzz,
    "render": _run_render,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "fuzz":
        args.cfg = _resolve_scenario(parser, args)
    try:
        report, status = _RUNNERS[args.command](args)
    except GeometryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(report, indent=2))
    return status


if __name__ == "__main__":
    sys.exit(main())
