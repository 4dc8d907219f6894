"""Command-line front end.

Exit codes are a stable contract:
  0  success / all checks passed
  1  an axiom or separation check failed
  2  usage error (unknown command, op, or flag combination)
  3  validation error (malformed or out-of-contract input)
  4  I/O error
"""

from __future__ import annotations

import argparse
import sys

from . import axioms as ax
from .connectives import connective_by_name
from .convolution import GridSpec, convolve_join, convolve_meet
from .errors import DomainError, ValidationError
from .piecewise import (
    PiecewiseFn,
    canonicalize,
    dumps,
    envelope_left,
    envelope_right,
    loads,
    reflect,
    sample_rows,
)
from .plotting import render_svg
from .rationals import to_rational
from .report import all_passed, format_report_table
from .star import resolve_operation

EXIT_OK = 0
EXIT_AXIOM_FAILURE = 1
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_IO = 4

_UNARY_OPS = {
    "neg": reflect,
    "env-left": envelope_left,
    "env-right": envelope_right,
}


class _UsageError(Exception):
    pass


def _load_function(path: str) -> PiecewiseFn:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise IOError(f"cannot write {path}: {exc}") from exc


def _parse_conv_name(name: str):
    parts = name.split(":")
    if len(parts) != 3 or parts[0] not in ("conv-meet", "conv-join"):
        raise _UsageError(
            f"convolution ops are written conv-meet:<tnorm>:<star> or "
            f"conv-join:<tconorm>:<star>, got {name!r}"
        )
    combiner = connective_by_name(parts[1])
    star_conn = connective_by_name(parts[2])
    return parts[0], combiner, star_conn


def _grid_from_args(args) -> GridSpec:
    tol = to_rational(args.tolerance) if args.tolerance is not None else None
    return GridSpec(args.grid, tol)


def _cmd_eval(args) -> int:
    name = args.op
    if name.startswith("conv-"):
        if len(args.files) != 2:
            raise _UsageError(f"{name} takes exactly two function files")
        form, combiner, star_conn = _parse_conv_name(name)
        f = _load_function(args.files[0])
        g = _load_function(args.files[1])
        grid = _grid_from_args(args)
        conv = convolve_meet if form == "conv-meet" else convolve_join
        result = conv(f, g, star_conn, combiner, grid)
        _write_text(args.out, result.to_csv(decimal=args.decimal))
        return EXIT_OK

    if name in _UNARY_OPS:
        if len(args.files) != 1:
            raise _UsageError(f"{name} takes exactly one function file")
        result = _UNARY_OPS[name](_load_function(args.files[0]))
    else:
        try:
            op = resolve_operation(name)
        except ValidationError:
            raise _UsageError(
                f"unknown op {name!r}; known: star, costar, meet, join, neg, "
                f"env-left, env-right, conv-meet:..., conv-join:..."
            ) from None
        if len(args.files) != 2:
            raise _UsageError(f"{name} takes exactly two function files")
        result = op(_load_function(args.files[0]), _load_function(args.files[1]))

    result = canonicalize(result)
    rows = sample_rows(result, args.samples, decimal=args.decimal)
    csv = "x,value\n" + "".join(f"{x},{v}\n" for x, v in rows)
    _write_text(args.out, csv)
    if args.json_out:
        _write_text(args.json_out, dumps(result, indent=2) + "\n")
    return EXIT_OK


def _cmd_axioms(args) -> int:
    try:
        op = resolve_operation(args.op)
    except ValidationError as exc:
        raise _UsageError(str(exc)) from None
    if args.kind not in (ax.TR_NORM, ax.TR_CONORM):
        raise _UsageError("kind must be tr-norm or tr-conorm")
    config = ax.GeneratorConfig(seed=args.seed)
    scale = max(1, args.trials)
    reports = ax.check_tr_axioms(
        op,
        args.kind,
        config,
        pairs=scale,
        triples=max(1, scale // 2),
        neutral_trials=max(1, scale // 2),
        monotone_trials=max(1, scale // 2),
        closure_denominator=16 if scale >= 100 else 8,
    )
    print(format_report_table(reports))
    return EXIT_OK if all_passed(reports) else EXIT_AXIOM_FAILURE


def _cmd_plot(args) -> int:
    labels = args.labels.split(",") if args.labels else None
    if labels and len(labels) != len(args.files):
        raise _UsageError("--labels needs one label per file")
    series = []
    for i, path in enumerate(args.files):
        label = labels[i] if labels else path
        series.append((label, canonicalize(_load_function(path))))
    _write_text(args.out, render_svg(series))
    return EXIT_OK


def _cmd_separation(args) -> int:
    names = [n for n in args.star.split(",") if n]
    if not names:
        raise _UsageError("at least one inner connective is required")
    choices = [connective_by_name(n) for n in names]
    grid = _grid_from_args(args)
    rows = ax.separation_rows(choices, grid)
    header = ("star", "exact_product_value", "oracle_lower_bound", "separated")
    print(",".join(header))
    for row in rows:
        print(
            f"{row['star']},{row['exact_product_value']},"
            f"{row['oracle_lower_bound']},{'yes' if row['separated'] else 'NO'}"
        )
    return EXIT_OK if all(r["separated"] for r in rows) else EXIT_AXIOM_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="t2algebra",
        description="Exact operations on normal/convex truth-value functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an operation on function files")
    p_eval.add_argument("op")
    p_eval.add_argument("files", nargs="+")
    p_eval.add_argument("--samples", type=int, default=11)
    p_eval.add_argument("--grid", type=int, default=200)
    p_eval.add_argument("--tolerance", default=None)
    p_eval.add_argument("--decimal", action="store_true")
    p_eval.add_argument("--out", default=None)
    p_eval.add_argument("--json-out", dest="json_out", default=None)
    p_eval.set_defaults(run=_cmd_eval)

    p_ax = sub.add_parser("axioms", help="run the restrictive-axiom suite")
    p_ax.add_argument("op")
    p_ax.add_argument("kind", choices=[ax.TR_NORM, ax.TR_CONORM])
    p_ax.add_argument("--seed", type=int, default=0)
    p_ax.add_argument("--trials", type=int, default=200)
    p_ax.set_defaults(run=_cmd_axioms)

    p_plot = sub.add_parser("plot", help="render functions to SVG")
    p_plot.add_argument("files", nargs="+")
    p_plot.add_argument("--out", required=True)
    p_plot.add_argument("--labels", default=None)
    p_plot.set_defaults(run=_cmd_plot)

    p_sep = sub.add_parser(
        "separation", help="replicate the non-convolution separation"
    )
    p_sep.add_argument("--grid", type=int, default=200)
    p_sep.add_argument("--tolerance", default=None)
    p_sep.add_argument("--star", default="min,product,lukasiewicz")
    p_sep.set_defaults(run=_cmd_separation)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValidationError, DomainError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except IOError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
