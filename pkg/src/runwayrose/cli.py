"""Command line interface: ``runwayrose {bin,orient,coeffs,render}``.

Exit codes: 0 success, 1 validation failure, 2 I/O or parse error,
3 internal error.
"""

import argparse
import json
import math
import sys

from .coefficients import DEFAULT_HALF_WIDTH, paper_table
from .coverage import DEFAULT_THRESHOLD, best_pair, orient, runway_designator
from .errors import ParseError, WindRoseError
from .formats import load_rose_or_observations, read_observations, rose_to_dict, write_rose
from .geometry import (MC_DEFAULT_SAMPLES, MC_DEFAULT_SEED, Strip, coefficient_table,
                       mc_table_deviation)
from .render import RenderOptions, render_rose_svg
from .rose import (DEFAULT_CLASSES, DEFAULT_RINGS, BandGeometry, OrientationClasses,
                   bin_observations, validate_rose)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_VALIDATION, EXIT_IO, EXIT_INTERNAL = 0, 1, 2, 3


class _Raw(str):
    """Number already formatted; the JSON writer prints it verbatim."""


def _to_json(obj, indent=2, level=0):
    # json.dumps cannot force trailing zeros, hence this small writer
    pad, inner = " " * (indent * level), " " * (indent * (level + 1))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_to_json(v, indent, level + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if not any(isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(_to_json(v) for v in obj) + "]"
        items = [f"{inner}{_to_json(v, indent, level + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    if isinstance(obj, _Raw):
        return str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError("cannot serialise a non-finite number")
        text = f"{obj:.6f}"
        return "0.000000" if text == "-0.000000" else text
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _parse_bands(text):
    try:
        return BandGeometry(tuple(float(x) for x in text.split(",")))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_output(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _table(rose, args):
    if args.coeffs == "paper":
        return paper_table(rose.geometry, rose.classes, args.crosswind)
    return coefficient_table(rose.geometry, rose.classes, args.crosswind)


def _load_rose(args):
    text = _read_input(args.input)
    return load_rose_or_observations(text, args.bands, OrientationClasses(args.classes),
                                     args.storm_as_calm)


def build_report(rose, args):
    """Report dictionary for ``orient``."""
    table = _table(rose, args)
    rep = orient(rose, table, args.threshold, args.numbering)
    classes = rose.classes

    def entry(k):
        az = classes.azimuth(k)
        return {
            "class": k,
            "azimuth_deg": az,
            "name": classes.name(k),
            "designator": str(runway_designator(az, args.numbering, k, classes)),
            "coverage_pct": rep.coverage[k],
        }

    best = entry(rep.best_class)
    report = {
        "schema_version": SCHEMA_VERSION,
        "classes": classes.count,
        "bands": list(rose.geometry.ring_radii),
        "crosswind_half_width_kmph": float(args.crosswind),
        "coefficient_source": table.source,
        "numbering": args.numbering,
        "calm_pct": rep.calm_pct,
        "above_max_pct": rose.above_max,
        "coverage": [entry(k) for k in range(classes.count)],
        "best": {k: best[k] for k in ("class", "azimuth_deg", "name", "designator",
                                     "coverage_pct")},
        "meets_threshold": rep.meets_threshold,
        "threshold_pct": rep.threshold_pct,
    }
    if args.pair != "none":
        (_, partner), value = best_pair(rose, rep.best_class, args.pair, args.crosswind)
        p = entry(partner)
        report["pair"] = {
            "mode": args.pair,
            "partner_class": partner,
            "partner_azimuth_deg": p["azimuth_deg"],
            "partner_name": p["name"],
            "partner_designator": p["designator"],
            "combined_coverage_pct": value,
            "meets_threshold": bool(value >= args.threshold),
        }
    return report


def format_text_report(report):
    lines = [f"{'Orientation':<14}{'Azimuth':>9}  {'Runway':<8}{'Coverage %':>12}"]
    for e in report["coverage"]:
        lines.append(f"{e['name']:<14}{e['azimuth_deg']:>9.2f}  {e['designator']:<8}"
                     f"{e['coverage_pct']:>12.6f}")
    best = report["best"]
    lines += [
        "",
        f"Calm period:          {report['calm_pct']:.6f} %",
        f"Runway orientation:   {best['name']}",
        f"Runway number:        {best['designator']}",
        f"Coverage:             {best['coverage_pct']:.6f} %",
    ]
    thr = report["threshold_pct"]
    if report["meets_threshold"]:
        lines.append(f"Coverage meets the {thr:g} % requirement.")
    else:
        lines.append(f"Coverage is below {thr:g} %: add another runway orientation so the "
                     f"combined coverage reaches {thr:g} %, or the highest attainable.")
    if "pair" in report:
        p = report["pair"]
        lines.append(f"Second runway ({p['mode']}): {p['partner_name']} "
                     f"({p['partner_designator']}), combined coverage "
                     f"{p['combined_coverage_pct']:.6f} %")
    return "\n".join(lines) + "\n"


def cmd_bin(args):
    obs = read_observations(_read_input(args.input))
    rose = bin_observations(obs, args.bands, OrientationClasses(args.classes),
                            args.storm_as_calm)
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, **rose_to_dict(rose)}
        # full precision so the numbers survive a round trip
        payload["cells"] = [[_Raw(repr(x)) for x in row] for row in payload["cells"]]
        for key in ("above_max", "calm"):
            payload[key] = _Raw(repr(payload[key]))
        text = _to_json(payload) + "\n"
    else:
        text = write_rose(rose)
    _write_output(text, args.out)
    return EXIT_OK


def cmd_orient(args):
    rose = validate_rose(_load_rose(args))
    report = build_report(rose, args)
    if args.format == "json":
        text = _to_json(report) + "\n"
    else:
        text = format_text_report(report)
    _write_output(text, args.out)
    if args.svg:
        strip = Strip(report["best"]["azimuth_deg"], args.crosswind)
        _write_output(render_rose_svg(rose, RenderOptions(strip=strip, show_values=True)),
                      args.svg)
    return EXIT_OK


def cmd_coeffs(args):
    classes = OrientationClasses(args.classes)
    if args.coeffs == "paper":
        table = paper_table(args.bands, classes, args.crosswind)
    else:
        table = coefficient_table(args.bands, classes, args.crosswind)
    deviation = None
    if args.verify:
        deviation = mc_table_deviation(table, args.mc_samples, args.seed)
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, **table.to_dict()}
        payload["rows"] = [[_Raw(f"{x:.9g}") for x in row] for row in table.rows]
        if deviation is not None:
            payload["mc_verify"] = {"samples": args.mc_samples, "seed": args.seed,
                                    "max_abs_deviation": _Raw(f"{deviation:.9g}")}
        text = _to_json(payload) + "\n"
    else:
        text = table.to_csv()
        if deviation is not None:
            text += (f"# mc_verify samples={args.mc_samples} seed={args.seed} "
                     f"max_abs_deviation={deviation:.9g}\n")
    _write_output(text, args.out)
    return EXIT_OK


def cmd_render(args):
    rose = validate_rose(_load_rose(args))
    strip = None
    if args.strip_azimuth is not None:
        strip = Strip(args.strip_azimuth, args.crosswind)
    svg = render_rose_svg(rose, RenderOptions(canvas_px=args.canvas, strip=strip,
                                              show_values=args.show_values,
                                              decimals=args.decimals))
    _write_output(svg, args.svg or args.out)
    return EXIT_OK


def _common(p, fmt_default):
    p.add_argument("--bands", type=_parse_bands, default=BandGeometry(DEFAULT_RINGS),
                   help="ring radii in km/h, comma separated (default 6.4,15,30,47)")
    p.add_argument("--classes", type=int, default=DEFAULT_CLASSES,
                   help="number of orientation classes (default 8)")
    p.add_argument("--crosswind", type=float, default=DEFAULT_HALF_WIDTH,
                   help="permissible crosswind, i.e. strip half-width in km/h (default 25)")
    p.add_argument("--format", choices=("json", "text"), default=fmt_default)
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--storm-as-calm", action="store_true",
                   help="count winds above the outer ring as calm (legacy tally)")


def make_parser():
    parser = argparse.ArgumentParser(
        prog="runwayrose", description="Runway orientation from wind rose data.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bin", help="bin raw observations into a wind rose")
    p.add_argument("input", help="raw observation CSV ('-' for stdin)")
    _common(p, "text")
    p.set_defaults(func=cmd_bin)

    p = sub.add_parser("orient", help="coverage per orientation and best runway")
    p.add_argument("input", help="binned rose or raw observation CSV ('-' for stdin)")
    _common(p, "json")
    p.add_argument("--coeffs", choices=("derived", "paper"), default="derived")
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--pair", choices=("none", "perpendicular", "exhaustive"), default="none")
    p.add_argument("--numbering", choices=("standard", "paper"), default="standard")
    p.add_argument("--svg", default=None, help="also write an SVG of the rose and best strip")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("coeffs", help="print the overlap coefficient table")
    _common(p, "text")
    p.add_argument("--coeffs", choices=("derived", "paper"), default="derived")
    p.add_argument("--verify", action="store_true",
                   help="compare against a Monte Carlo estimate")
    p.add_argument("--seed", type=int, default=MC_DEFAULT_SEED)
    p.add_argument("--mc-samples", type=int, default=MC_DEFAULT_SAMPLES)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("render", help="draw the rose as SVG")
    p.add_argument("input", help="binned rose or raw observation CSV ('-' for stdin)")
    _common(p, "text")
    p.add_argument("--svg", default=None, help="SVG output path (default --out or stdout)")
    p.add_argument("--strip-azimuth", type=float, default=None,
                   help="draw a runway strip along this azimuth")
    p.add_argument("--show-values", action="store_true")
    p.add_argument("--decimals", type=int, default=2)
    p.add_argument("--canvas", type=int, default=800)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None):
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except WindRoseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
