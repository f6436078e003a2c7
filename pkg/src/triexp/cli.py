"""Command-line entry point: ``triexp <command> [options]``.

Exit status is 0 on success, 1 when the demo misses its reproduction
tolerance and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from . import io
from .errors import TriexpError
from .metrics import FitReport, residual_report
from .prony import FitMode, FitOptions, evaluate, fit
from .series import FIXTURE_YEAR_ORIGIN, TimeSeries, load_fixture, validate_series
from .smoothing import SmoothingConfig, smooth
from .svg import render_svg

EXIT_OK, EXIT_TOLERANCE, EXIT_USAGE = 0, 1, 2
REPRODUCTION_RTOL = 1e-6


class UsageError(TriexpError):
    pass


def _load_input(args) -> TimeSeries:
    if getattr(args, "dataset", None):
        if args.input:
            raise UsageError("give either --input or --dataset, not both")
        return load_fixture(args.dataset)
    if not args.input:
        raise UsageError("an input series is required (--input FILE or --dataset NAME)")
    return io.ingest_csv(args.input, year_origin=args.year_origin)


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline="\n"), True


def _summary(report: FitReport) -> str:
    lines = [
        f"nodes             {len(report.residuals)}",
        f"max |residual|    {report.max_abs_residual:.6e}",
        f"rms residual      {report.rms_residual:.6e}",
        f"max |imag|        {report.max_imag:.6e}",
    ]
    lines += [f"loss {k:<12} {v:.6e}" for k, v in report.losses.items()]
    return "\n".join(lines)


def cmd_smooth(args) -> int:
    series = _load_input(args)
    out = smooth(series, SmoothingConfig(args.passes))
    fh, close = _open_out(args.output)
    try:
        io.write_series_csv(out, fh)
    finally:
        if close:
            fh.close()
    return EXIT_OK


def cmd_fit(args) -> int:
    series = _load_input(args)
    options = FitOptions(args.terms, args.mode, symmetrize=not args.no_symmetrize)
    model = fit(series, options)
    meta = {"source": series.name, "mode": options.mode.value, "p": str(options.p)}
    text = io.serialize_model(io.ModelDocument(model, meta))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8", newline="\n")
    print(f"fitted {len(model)} terms ({options.mode.value}) to {len(series)} points of {series.name or 'input'}")
    print(_summary(residual_report(model, series)))
    return EXIT_OK


def _grid(t_from: float, t_to: float, step: float) -> np.ndarray:
    if not (math.isfinite(t_from) and math.isfinite(t_to) and math.isfinite(step)):
        raise UsageError("--from, --to and --step must be finite")
    if step <= 0:
        raise UsageError(f"--step must be positive, got {step}")
    if t_to < t_from:
        raise UsageError("--to must not be smaller than --from")
    n = int(math.floor((t_to - t_from) / step + 1e-9)) + 1
    return t_from + step * np.arange(n)


def cmd_eval(args) -> int:
    grid = _grid(args.t_from, args.t_to, args.step)
    model = io.read_model(args.model).model
    values = np.asarray(evaluate(model, grid))
    fh, close = _open_out(args.output)
    try:
        io.write_eval_csv(grid, values, fh)
    finally:
        if close:
            fh.close()
    return EXIT_OK


def cmd_report(args) -> int:
    model = io.read_model(args.model).model
    series = _load_input(args)
    print(json.dumps(residual_report(model, series).to_dict(), indent=2))
    return EXIT_OK


def cmd_plot(args) -> int:
    model = io.read_model(args.model).model
    series = _load_input(args)
    svg = render_svg(series, model, title=series.name)
    fh, close = _open_out(args.output)
    try:
        fh.write(svg)
    finally:
        if close:
            fh.close()
    return EXIT_OK


def _complex_str(v: complex) -> str:
    return f"{v.real:.15g}{v.imag:+.6e}i"


def demo_series(dataset: str) -> TimeSeries:
    series = load_fixture(dataset)
    if len(series) > 30:
        # Table 1 runs t = 1..32; keep the 30 interior points t = 2..31
        series = validate_series(series.points[1:31], name=series.name)
    return series


def cmd_demo(args) -> int:
    dataset = args.dataset or "gdp_hu_eq1"
    series = demo_series(dataset)
    origin = FIXTURE_YEAR_ORIGIN[dataset]
    p = len(series) // 2
    model = fit(series, FitOptions(p, FitMode.EXACT))
    report = residual_report(model, series)
    values = np.asarray(evaluate(model, series.t))

    print(f"{dataset}: {len(series)} points, exact fit with {p} exponential terms")
    print(f"{'Year':>6} {'t':>4} {'tabulated':>12} {'calculated':>34} {'re residue':>12} {'im residue':>12}")
    for pt, v in zip(series, values):
        print(
            f"{int(round(pt.t + origin)):>6} {pt.t:>4g} {pt.y:>12.6g} {_complex_str(v):>34} "
            f"{pt.y - v.real:>12.3e} {v.imag:>12.3e}"
        )

    outdir = Path(args.output or "gdp_demo")
    outdir.mkdir(parents=True, exist_ok=True)
    meta = {"source": series.name, "mode": "exact", "p": str(p)}
    io.write_model(io.ModelDocument(model, meta), outdir / "model.json")
    (outdir / "fit.svg").write_text(render_svg(series, model, title=series.name), encoding="utf-8", newline="\n")

    reports = [("original", p, report)]
    if not args.no_smooth:
        smoothed = smooth(series)
        ps = len(smoothed) // 2
        if len(smoothed) % 2:
            smoothed = validate_series(smoothed.points[: 2 * ps], name=smoothed.name)
        smodel = fit(smoothed, FitOptions(ps, FitMode.EXACT))
        reports.append(("smoothed", ps, residual_report(smodel, smoothed)))
        io.write_model(io.ModelDocument(smodel, {**meta, "p": str(ps), "smoothing": "triangle, 1 pass"}),
                       outdir / "model_smoothed.json")

    print()
    header = f"{'':<18}" + "".join(f"{f'{name} (p={q})':>22}" for name, q, _ in reports)
    print(header)
    rows = [("nodes", lambda r: f"{len(r.residuals)}"),
            ("max |residual|", lambda r: f"{r.max_abs_residual:.6e}"),
            ("rms residual", lambda r: f"{r.rms_residual:.6e}"),
            ("max |imag|", lambda r: f"{r.max_imag:.6e}")]
    rows += [(f"loss {k}", (lambda k: lambda r: f"{r.losses[k]:.6e}")(k)) for k in report.losses]
    for label, cell in rows:
        print(f"{label:<18}" + "".join(f"{cell(r):>22}" for _, _, r in reports))
    print(f"\nwrote {outdir / 'model.json'} and {outdir / 'fit.svg'}")

    tol = REPRODUCTION_RTOL * float(np.max(np.abs(series.y)))
    if report.max_abs_residual > tol or report.max_imag > tol:
        print(f"reproduction tolerance {tol:.3e} not met", file=sys.stderr)
        return EXIT_TOLERANCE
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="triexp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(p):
        p.add_argument("--input", help="CSV file with header t,value or year,value")
        p.add_argument("--dataset", help="embedded series instead of --input (gdp_hu_eq1, gdp_hu_table1)")
        p.add_argument("--year-origin", type=float, help="for year,value files: t = year - origin")

    p = sub.add_parser("smooth", help="triangle-centroid smoothing")
    add_input(p)
    p.add_argument("--output", help="CSV output (default stdout)")
    p.add_argument("--passes", type=int, default=1)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("fit", help="fit a sum of complex exponentials")
    add_input(p)
    p.add_argument("--terms", type=int, required=True, help="number of exponential terms p")
    p.add_argument("--mode", choices=[m.value for m in FitMode], default="exact")
    p.add_argument("--no-symmetrize", action="store_true", help="keep raw (not exactly conjugate) pairs")
    p.add_argument("--output", help="model JSON output")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("eval", help="evaluate a model on a grid")
    p.add_argument("--model", required=True)
    p.add_argument("--from", dest="t_from", type=float, required=True)
    p.add_argument("--to", dest="t_to", type=float, required=True)
    p.add_argument("--step", type=float, default=1.0)
    p.add_argument("--output", help="CSV output (default stdout)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("report", help="residual report of a model against a series (JSON)")
    p.add_argument("--model", required=True)
    add_input(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("plot", help="SVG of data and model")
    p.add_argument("--model", required=True)
    add_input(p)
    p.add_argument("--output", help="SVG output (default stdout)")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("demo", help="reproduce the Hungarian GDP interpolation")
    p.add_argument("--dataset", choices=sorted(FIXTURE_YEAR_ORIGIN), default="gdp_hu_eq1")
    p.add_argument("--no-smooth", action="store_true", help="skip the smoothed-series comparison")
    p.add_argument("--output", help="directory for model.json and fit.svg (default ./gdp_demo)")
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TriexpError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
