"""Command line front end: verify, scan, and tabulate.

Exit codes: 0 all checks passed (or table written), 1 a numerical claim
failed, 2 usage error.  Reports go to stdout by default or to --out; the
--plot flag additionally renders a PNG next to the output.

Parameter grids are given as ``--params key=start:stop:step`` or
``--params key=v1,v2,v3``; bare values continue the most recent key, so
``p=0.3,0.5,0.8`` is one three-value grid.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import ArgumentError, TraceLabError
from .harness import as_jsonable
from .suites import (
    MAX_DIM,
    RunConfig,
    SCANS,
    SUITES,
    TABULATIONS,
    run_scan,
    run_suite,
    run_tabulation,
)

__all__ = ["build_parser", "main", "main_entry"]

_CSV_FIELDS = (
    "suite",
    "claim",
    "trials",
    "dim",
    "seed",
    "tol",
    "max_violation",
    "verdict",
    "witness",
    "runtime_ms",
)


def _append_values(target: list[float], text: str, spec: str) -> None:
    text = text.strip()
    try:
        if ":" in text:
            parts = text.split(":")
            if len(parts) != 3:
                raise ArgumentError(
                    f"grid must be start:stop:step, got {text!r} in {spec!r}"
                )
            start, stop, step = (float(part) for part in parts)
            if step <= 0:
                raise ArgumentError(f"grid step must be positive in {spec!r}")
            if stop < start:
                raise ArgumentError(f"grid stop must be >= start in {spec!r}")
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            target.extend(start + i * step for i in range(count))
        else:
            target.append(float(text))
    except ValueError:
        raise ArgumentError(f"bad numeric value {text!r} in {spec!r}") from None


def parse_params(specs: list[str] | None) -> dict[str, tuple[float, ...]]:
    """Parse repeated --params strings into {key: values}.

    Each comma-separated token either starts a new key (``key=...``) or
    extends the values of the most recent one.
    """
    params: dict[str, list[float]] = {}
    current: str | None = None
    for spec in specs or []:
        for token in spec.split(","):
            token = token.strip()
            if not token:
                continue
            if "=" in token:
                key, _, value = token.partition("=")
                key = key.strip()
                if not key:
                    raise ArgumentError(f"empty parameter name in {spec!r}")
                current = key
                params.setdefault(key, [])
                _append_values(params[key], value, spec)
            else:
                if current is None:
                    raise ArgumentError(
                        f"value {token!r} in {spec!r} appears before any key="
                    )
                _append_values(params[current], token, spec)
    return {key: tuple(values) for key, values in params.items()}


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        dim=getattr(args, "dim", 4),
        trials=getattr(args, "trials", 300),
        seed=getattr(args, "seed", 42),
        tol=getattr(args, "tol", None),
        params=parse_params(args.params),
    )


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _figure_path(args: argparse.Namespace, stem: str) -> str:
    out = getattr(args, "out", None)
    if out:
        root = out.rsplit(".", 1)[0] if "." in out.rsplit("/", 1)[-1] else out
        return root + ".png"
    return f"tracelab-{stem}.png"


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return format(value, ".15e")
    if isinstance(value, (int, str)):
        return str(value)
    return json.dumps(as_jsonable(value), separators=(",", ":"))


def _csv_text(header, rows) -> str:
    import csv
    import io

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_format_cell(cell) for cell in row])
    return buffer.getvalue()


def cmd_verify(args: argparse.Namespace) -> int:
    config = _config(args)
    requested: list[str] = []
    for name in args.suite:
        if name == "all":
            requested.extend(SUITES)
        elif name in SUITES:
            requested.append(name)
        else:
            raise ArgumentError(
                f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}"
            )
    names = list(dict.fromkeys(requested))
    if args.parallel > 1:
        with ThreadPoolExecutor(max_workers=args.parallel) as pool:
            reports = list(pool.map(lambda n: run_suite(n, config), names))
    else:
        reports = [run_suite(name, config) for name in names]
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    else:
        rows = [
            tuple(report.to_dict()[field] for field in _CSV_FIELDS)
            for report in reports
        ]
        text = _csv_text(_CSV_FIELDS, rows)
    _emit(text, args.out)
    if args.plot:
        from .figures import render_reports

        render_reports(reports, _figure_path(args, "verify"))
    return 0 if all(r.verdict == "pass" for r in reports) else 1


def cmd_scan(args: argparse.Namespace) -> int:
    config = _config(args)
    header, rows = run_scan(args.name, config)
    _emit(_csv_text(header, rows), args.out)
    if args.plot:
        from .figures import render_table

        render_table(args.name, header, rows, _figure_path(args, f"scan-{args.name}"))
    return 0


def cmd_tabulate(args: argparse.Namespace) -> int:
    config = _config(args)
    header, rows = run_tabulation(args.name, config)
    _emit(_csv_text(header, rows), args.out)
    if args.plot:
        from .figures import render_table

        render_table(
            args.name, header, rows, _figure_path(args, f"tabulate-{args.name}")
        )
    return 0


def _add_common(parser: argparse.ArgumentParser, *, dims: bool) -> None:
    if dims:
        parser.add_argument(
            "--dim", type=int, default=4, help=f"matrix dimension, 1..{MAX_DIM}"
        )
        parser.add_argument("--trials", type=int, default=300, help="trials per check")
        parser.add_argument("--seed", type=int, default=42, help="base seed")
    parser.add_argument(
        "--params",
        action="append",
        default=None,
        metavar="KEY=GRID",
        help="parameter grid, key=start:stop:step or key=v1,v2,...; repeatable",
    )
    parser.add_argument("--out", default=None, help="output path (default stdout)")
    parser.add_argument(
        "--plot", action="store_true", help="also render a PNG next to the output"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracelab",
        description="Sampled verification of trace-function convexity claims.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="run verification suites")
    verify.add_argument(
        "--suite",
        action="append",
        required=True,
        metavar="NAME",
        help=f"suite name or 'all'; repeatable; one of {', '.join(SUITES)}",
    )
    verify.add_argument(
        "--tol", type=float, default=None, help="violation tolerance (default per suite)"
    )
    verify.add_argument(
        "--format", choices=("json", "csv"), default="json", help="report format"
    )
    verify.add_argument(
        "--parallel", type=int, default=1, metavar="N", help="run suites on N threads"
    )
    _add_common(verify, dims=True)
    verify.set_defaults(handler=cmd_verify)

    scan = commands.add_parser("scan", help="parameter sweeps, CSV output")
    scan.add_argument("name", choices=tuple(SCANS), help="scan name")
    _add_common(scan, dims=True)
    scan.set_defaults(handler=cmd_scan)

    tabulate = commands.add_parser("tabulate", help="function tables, CSV output")
    tabulate.add_argument("name", choices=tuple(TABULATIONS), help="table name")
    _add_common(tabulate, dims=False)
    tabulate.set_defaults(handler=cmd_tabulate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except ArgumentError as exc:
        print(f"tracelab: error: {exc}", file=sys.stderr)
        return 2
    except TraceLabError as exc:
        print(f"tracelab: numerical failure: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    raise SystemExit(main())
