"""Command-line front end.

Subcommands: check, congruences, ideals, theorem (single LATT file
each), enumerate, search, census (size-bounded batch work).  Every
command takes --format text|json; text output is flat "key: value"
lines carrying the same fields as the JSON, so the two never diverge.

Exit codes: 0 success (including a passing verdict and an empty
search), 1 theorem-verdict failure or counterexample found, 2 invalid
input of any kind.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .congruences import all_congruences
from .core import FiniteLattice, LatticeError, ParseError, format_latt, parse_latt
from .enumeration import (
    SEARCH_PREDICATES,
    census,
    enumerate_lattices,
    search_counterexample,
    write_latt_files,
)
from .ideals import (
    enumerate_filters,
    enumerate_ideals,
    is_maximal_filter,
    is_maximal_ideal,
    is_prime_filter,
    is_prime_ideal,
)
from .properties import classify, verify_theorem


def _flat_lines(value: object, prefix: str = "") -> list[str]:
    """Depth-first "dotted.key: json-scalar" rendering of a report dict."""
    if isinstance(value, dict):
        lines: list[str] = []
        for key in sorted(value):
            child = f"{prefix}.{key}" if prefix else str(key)
            lines.extend(_flat_lines(value[key], child))
        return lines
    return [f"{prefix}: {json.dumps(value, sort_keys=True)}"]


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(_flat_lines(payload)))


def _load(path: str) -> FiniteLattice:
    data = Path(path).read_bytes()
    return parse_latt(data)


def _cmd_check(args: argparse.Namespace) -> int:
    report = classify(_load(args.file))
    _emit(report.to_dict(), args.format)
    return 0


def _cmd_congruences(args: argparse.Namespace) -> int:
    lattice = _load(args.file)
    congs = [str(c) for c in all_congruences(lattice)]
    if args.format == "json":
        _emit({"congruences": congs, "count": len(congs)}, "json")
    else:
        print(f"count: {len(congs)}")
        for c in congs:
            print(c)
    return 0


def _cmd_ideals(args: argparse.Namespace) -> int:
    lattice = _load(args.file)
    ideals = [
        {
            "set": str(s),
            "prime": is_prime_ideal(lattice, s),
            "maximal": is_maximal_ideal(lattice, s),
        }
        for s in enumerate_ideals(lattice)
    ]
    filters = [
        {
            "set": str(s),
            "prime": is_prime_filter(lattice, s),
            "maximal": is_maximal_filter(lattice, s),
        }
        for s in enumerate_filters(lattice)
    ]
    if args.format == "json":
        _emit({"filters": filters, "ideals": ideals}, "json")
    else:
        for row in ideals:
            print(f"ideal {row['set']}: prime={json.dumps(row['prime'])} "
                  f"maximal={json.dumps(row['maximal'])}")
        for row in filters:
            print(f"filter {row['set']}: prime={json.dumps(row['prime'])} "
                  f"maximal={json.dumps(row['maximal'])}")
    return 0


def _cmd_theorem(args: argparse.Namespace) -> int:
    verdict = verify_theorem(_load(args.file))
    _emit(verdict.to_dict(), args.format)
    return 0 if verdict.passed else 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    count = sum(1 for _ in enumerate_lattices(args.size))
    payload: dict[str, object] = {"count": count, "size": args.size}
    if args.out is not None:
        written = write_latt_files(args.size, args.out)
        payload["out"] = str(Path(args.out))
        payload["files_written"] = len(written)
    _emit(payload, args.format)
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    witnesses = search_counterexample(args.predicate, args.max_size)
    payload = {
        "max_size": args.max_size,
        "predicate": args.predicate,
        "witness_count": len(witnesses),
        "witnesses": [
            {"lattice": format_latt(w.lattice), "report": w.report.to_dict()}
            for w in witnesses
        ],
    }
    _emit(payload, args.format)
    return 1 if witnesses else 0


def _cmd_census(args: argparse.Namespace) -> int:
    rows = census(args.max_size)
    if args.format == "json":
        _emit({"rows": [r.to_dict() for r in rows]}, "json")
    else:
        print("size lattices d_lattices balanced_d complemented_d elapsed")
        for r in rows:
            print(
                f"{r.size} {r.lattice_count} {r.d_lattice_count} "
                f"{r.balanced_count} {r.complemented_count} {r.elapsed:.3f}"
            )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finlat",
        description="Decision procedures and exhaustive verification for finite bounded lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="classify one lattice from a LATT file")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("congruences", help="list the congruence lattice")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(fn=_cmd_congruences)

    p = sub.add_parser("ideals", help="list ideals and filters with prime/maximal flags")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(fn=_cmd_ideals)

    p = sub.add_parser("theorem", help="verify the seven-way equivalence on one lattice")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(fn=_cmd_theorem)

    p = sub.add_parser("enumerate", help="count (and optionally write) all lattices of one size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--out", default=None, help="directory for lat_<n>_<index>.latt files")
    add_format(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("search", help="scan all lattices up to a size for a counterexample")
    p.add_argument("--predicate", required=True, choices=sorted(SEARCH_PREDICATES))
    p.add_argument("--max-size", type=int, required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("census", help="per-size counts up to a bound")
    p.add_argument("--max-size", type=int, required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_census)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    source = getattr(args, "file", None)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {source}:{exc.line}: {exc}", file=sys.stderr)
        return 2
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
