"""Command-line front end for the two-point correlator library.

Four subcommands: ``value`` (one correlator, default cross-checked on both
computation paths), ``table`` (one full genus row, default closed form, with
an optional on-disk cache), ``verify`` (the exact check suite), and ``bench``
(wall time and value bit-size per genus for either path).

Data goes to stdout, every diagnostic and timing goes to stderr.  Exit codes
are a stable contract: 0 success, 1 verification failure, 2 usage or range
error, 3 mismatch between the two computation paths.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from time import perf_counter

from . import verification
from .closedform import clear_caches, normalize, two_point_closed
from .combinatorics import rational_str
from .recursion import (
    TableValidationError,
    TwoPointTable,
    build_table,
    genus_row,
    two_point_recursive,
)

__all__ = ["main", "run", "cmd_value", "cmd_table", "cmd_verify", "cmd_bench"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3

CSV_HEADER = "g,k,correlator,normalized"

_CHECKS = {
    "cross": lambda g_max: verification.cross_validate(g_max),
    "symmetry": lambda g_max: verification.check_symmetry(g_max),
    "bounds": lambda g_max: verification.check_bounds(g_max),
    "residual-tau": lambda g_max: verification.check_residual_tau(g_max),
    "residual-a": lambda g_max: verification.check_residual_a(g_max),
    "residual-b": lambda g_max: verification.check_residual_b(g_max),
}


def _diag(message: str) -> None:
    print(message, file=sys.stderr)


def _closed_row(g: int) -> tuple[Fraction, ...]:
    return tuple(two_point_closed(g, k) for k in range(3 * g))


def _row_lines(g: int, row: tuple[Fraction, ...], fmt: str) -> list[str]:
    """Render one genus row; every format carries correlator and normalized."""
    cells = [(k, rational_str(v), rational_str(normalize(g, k, v))) for k, v in enumerate(row)]
    if fmt == "csv":
        return [CSV_HEADER] + [f"{g},{k},{c},{a}" for k, c, a in cells]
    if fmt == "json":
        obj = {
            "g": g,
            "rows": [{"k": k, "correlator": c, "normalized": a} for k, c, a in cells],
        }
        return [json.dumps(obj)]
    return [f"{g} {k} {c} {a}" for k, c, a in cells]


def cmd_value(args: argparse.Namespace) -> int:
    g, k = args.g, args.k
    if g < 1:
        _diag(f"g must be >= 1, got {g}")
        return EXIT_USAGE
    if not 0 <= k <= 3 * g - 1:
        _diag(f"k must be in 0..{3 * g - 1} at genus {g}, got {k}")
        return EXIT_USAGE

    if args.method in ("closed", "both"):
        closed = two_point_closed(g, k)
    if args.method in ("recursive", "both"):
        table = build_table(g - 1) if g > 1 else None
        recursive = two_point_recursive(g, k, table)
    if args.method == "both":
        if closed != recursive:
            _diag(
                f"path mismatch at ({g},{k}): closed {rational_str(closed)}, "
                f"recursive {rational_str(recursive)}"
            )
            return EXIT_MISMATCH
        value = closed
    else:
        value = closed if args.method == "closed" else recursive

    norm = rational_str(normalize(g, k, value))
    corr = rational_str(value)
    if args.format == "csv":
        print(CSV_HEADER)
        print(f"{g},{k},{corr},{norm}")
    elif args.format == "json":
        print(json.dumps({"g": g, "k": k, "correlator": corr, "normalized": norm}))
    else:
        print(corr)
        print(norm)
    return EXIT_OK


def _load_cache(path: Path) -> TwoPointTable | None:
    if not path.exists():
        return None
    start = perf_counter()
    try:
        table = TwoPointTable.load(path)
    except (TableValidationError, OSError, UnicodeDecodeError) as exc:
        _diag(f"cache: invalid ({exc}); recomputing")
        return None
    ms = (perf_counter() - start) * 1000
    _diag(f"cache: loaded genera 1..{table.max_genus_complete} from {path} in {ms:.1f} ms")
    return table


def cmd_table(args: argparse.Namespace) -> int:
    g = args.g
    if g < 1:
        _diag(f"g must be >= 1, got {g}")
        return EXIT_USAGE

    cache_path = Path(args.cache) if args.cache else None
    cached = _load_cache(cache_path) if cache_path else None
    rows: dict[int, tuple[Fraction, ...]] = {}
    if cached is not None:
        rows = {gg: cached.row(gg) for gg in range(1, cached.max_genus_complete + 1)}
    have = len(rows)

    computed = False
    if have < g:
        start = perf_counter()
        if args.method == "closed":
            for gg in range(have + 1, g + 1):
                rows[gg] = _closed_row(gg)
        else:
            # recursive and both fill the table by the genus recursion
            prev = rows[have] if have else None
            for gg in range(have + 1, g + 1):
                prev = genus_row(gg, prev)
                rows[gg] = prev
        ms = (perf_counter() - start) * 1000
        _diag(f"table: computed genera {have + 1}..{g} ({args.method}) in {ms:.1f} ms")
        computed = True
    else:
        _diag("table: all rows from cache, no computation")

    if args.method == "both":
        # emitted rows only leave after both paths agree entry by entry
        start = perf_counter()
        check = _closed_row(g)
        for k, (closed, recursive) in enumerate(zip(check, rows[g])):
            if closed != recursive:
                _diag(
                    f"path mismatch at ({g},{k}): closed {rational_str(closed)}, "
                    f"recursive {rational_str(recursive)}"
                )
                return EXIT_MISMATCH
        ms = (perf_counter() - start) * 1000
        _diag(f"table: cross-checked genus {g} on both paths in {ms:.1f} ms")

    if cache_path and computed:
        start = perf_counter()
        TwoPointTable(rows).save(cache_path)
        ms = (perf_counter() - start) * 1000
        _diag(f"cache: wrote genera 1..{g} to {cache_path} in {ms:.1f} ms")

    for line in _row_lines(g, rows[g], args.format):
        print(line)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.g_max < 1:
        _diag(f"g-max must be >= 1, got {args.g_max}")
        return EXIT_USAGE
    names = [c.strip() for c in args.checks.split(",")] if args.checks else list(_CHECKS)
    unknown = [c for c in names if c not in _CHECKS]
    if unknown:
        _diag(f"unknown checks: {', '.join(unknown)} (valid: {', '.join(_CHECKS)})")
        return EXIT_USAGE

    table = None
    reports = []
    for name in names:
        start = perf_counter()
        if name in ("cross", "symmetry"):
            # both scan the recursive table; build it once and share
            if table is None or table.max_genus_complete < args.g_max:
                table = build_table(args.g_max)
            if name == "cross":
                report = verification.cross_validate(args.g_max, table)
            else:
                report = verification.check_symmetry(args.g_max, table)
        else:
            report = _CHECKS[name](args.g_max)
        ms = (perf_counter() - start) * 1000
        _diag(f"verify: {name} in {ms:.1f} ms")
        reports.append(report)

    if args.format == "json":
        print(json.dumps([r.to_json_obj() for r in reports]))
    elif args.format == "csv":
        print("check,passed,checked,failures")
        for r in reports:
            print(f"{r.check_name},{str(r.passed).lower()},{r.checked},{len(r.failures)}")
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"{r.check_name}: {status} (checked {r.checked})")
            for f in r.failures:
                print(
                    f"  ({f.g},{f.k}): expected {rational_str(f.expected)}, "
                    f"got {rational_str(f.actual)}"
                )
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAILED


def _row_bits(row: tuple[Fraction, ...]) -> int:
    return max(v.numerator.bit_length() + v.denominator.bit_length() for v in row)


def cmd_bench(args: argparse.Namespace) -> int:
    if args.g_max < 1:
        _diag(f"g-max must be >= 1, got {args.g_max}")
        return EXIT_USAGE
    do_closed = args.method in ("closed", "both")
    do_recursive = args.method in ("recursive", "both")

    columns = ["g"]
    if do_closed:
        columns += ["closed_ms", "closed_us_per_value"]
    if do_recursive:
        columns += ["recursive_ms", "recursive_us_per_value"]
    columns.append("max_bits")
    print("\t".join(columns))

    prev: tuple[Fraction, ...] | None = None
    recursive_cumulative = 0.0
    for g in range(1, args.g_max + 1):
        cells = [str(g)]
        row = None
        if do_closed:
            clear_caches()
            start = perf_counter()
            row = _closed_row(g)
            ms = (perf_counter() - start) * 1000
            cells += [f"{ms:.3f}", f"{ms * 1000 / (3 * g):.2f}"]
        if do_recursive:
            start = perf_counter()
            prev = genus_row(g, prev)
            recursive_cumulative += (perf_counter() - start) * 1000
            # a recursive genus-g row costs the whole chain below it
            cells += [
                f"{recursive_cumulative:.3f}",
                f"{recursive_cumulative * 1000 / (3 * g):.2f}",
            ]
            row = prev if row is None else row
        cells.append(str(_row_bits(row)))
        print("\t".join(cells))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tau2",
        description="Exact two-point correlators of 2D topological gravity, "
        "computed by genus recursion and by closed form.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    value = sub.add_parser("value", help="one correlator and its normalized form")
    value.add_argument("--g", type=int, required=True, help="genus, >= 1")
    value.add_argument("--k", type=int, required=True, help="first index, 0..3g-1")
    value.add_argument("--method", choices=("closed", "recursive", "both"), default="both")
    value.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    value.set_defaults(func=cmd_value)

    table = sub.add_parser("table", help="full row k = 0..3g-1 at one genus")
    table.add_argument("--g", type=int, required=True, help="genus, >= 1")
    table.add_argument("--method", choices=("closed", "recursive", "both"), default="closed")
    table.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    table.add_argument("--cache", help="table cache file to honor and update")
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run the exact cross-check suite")
    verify.add_argument("--g-max", type=int, required=True, help="top genus, >= 1")
    verify.add_argument("--checks", help=f"comma list from: {', '.join(_CHECKS)}")
    verify.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="time both computation paths per genus")
    bench.add_argument("--g-max", type=int, required=True, help="top genus, >= 1")
    bench.add_argument("--method", choices=("closed", "recursive", "both"), default="both")
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


def run() -> None:
    sys.exit(main())
