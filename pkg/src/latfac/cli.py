"""Command-line front end.

Verbs: ``lattice`` (make/validate/dual), ``enumerate``, ``verify``,
``count``, ``export``.  Exit code 0 on success, 1 on domain errors or failed
verification (with a machine-readable error object on stderr), 2 on usage
errors.  All output is deterministic: repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .bijections import (
    enumerate_closure_operators,
    enumerate_interior_operators,
    enumerate_submonoids,
)
from .counting import count_report, count_saturated_grid, poly_bernoulli
from .errors import BadParams, CarrierMismatch, LatfacError
from .factorization import enumerate_fac
from .lattice import Lattice, dual_lattice, hasse_dot, is_modular, make_standard
from .relations import Relation
from .suites import SUITE_NAMES, verify_suite
from .transfer import (
    DEFAULT_MAX_STRUCTURES,
    enumerate_saturated,
    enumerate_transfer,
    is_disklike,
)

FORMAT_VERSION = "latfac/1"

LATTICE_KINDS = ("chain", "grid", "boolean", "bowtie", "diamond", "pentagon")
ENUM_TARGETS = (
    "transfer",
    "fac",
    "saturated",
    "disklike",
    "closure",
    "interior",
    "submonoid",
)


def _dump_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _write_out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_lattice(path: str) -> Lattice:
    return Lattice.from_dict(_load_json(path))


def _lattice_doc(lattice: Lattice) -> dict:
    doc = lattice.as_dict()
    doc["format"] = FORMAT_VERSION
    return doc


def _print_table(rows: list[tuple], header: tuple | None = None) -> str:
    all_rows = ([header] if header else []) + [tuple(str(c) for c in r) for r in rows]
    if header:
        all_rows[0] = tuple(str(c) for c in header)
    widths = [max(len(r[i]) for r in all_rows) for i in range(len(all_rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in all_rows]
    if header:
        lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


# --- verb handlers -------------------------------------------------------------


def _cmd_lattice(args: argparse.Namespace) -> int:
    if args.action == "make":
        lattice = make_standard(args.kind, *args.params)
        _write_out(_dump_json(_lattice_doc(lattice)), args.output)
        return 0
    if args.action == "validate":
        lattice = _load_lattice(args.file)
        doc = {
            "format": FORMAT_VERSION,
            "elements": lattice.n,
            "covers": len(lattice.covers()),
            "bottom": lattice.labels[lattice.bottom],
            "top": lattice.labels[lattice.top],
            "modular": is_modular(lattice),
            "valid": True,
        }
        if args.json:
            _write_out(_dump_json(doc), args.output)
        else:
            rows = [(k, v) for k, v in doc.items() if k != "format"]
            _write_out(_print_table(rows), args.output)
        return 0
    if args.action == "dual":
        lattice = _load_lattice(args.file)
        _write_out(_dump_json(_lattice_doc(dual_lattice(lattice))), args.output)
        return 0
    raise BadParams(f"unknown lattice action {args.action!r}")


def _enumerate_structures(args: argparse.Namespace, lattice: Lattice) -> list[dict]:
    limit = args.max_structures
    if args.what == "transfer":
        return [{"pairs": [list(p) for p in s.pairs]} for s in enumerate_transfer(lattice, limit=limit)]
    if args.what == "saturated":
        return [{"pairs": [list(p) for p in s.pairs]} for s in enumerate_saturated(lattice, limit=limit)]
    if args.what == "disklike":
        return [
            {"pairs": [list(p) for p in s.pairs]}
            for s in enumerate_transfer(lattice, limit=limit)
            if is_disklike(s)
        ]
    if args.what == "fac":
        return [f.as_dict() for f in enumerate_fac(lattice, limit=limit)]
    if args.what == "closure":
        return [
            {"table": list(op.table)}
            for op in enumerate_closure_operators(lattice, limit=limit)
        ]
    if args.what == "interior":
        return [
            {"table": list(op.table)}
            for op in enumerate_interior_operators(lattice, limit=limit)
        ]
    if args.what == "submonoid":
        return [
            s.as_dict() for s in enumerate_submonoids(lattice, args.op, limit=limit)
        ]
    raise BadParams(f"unknown enumeration target {args.what!r}")


def _cmd_enumerate(args: argparse.Namespace) -> int:
    lattice = _load_lattice(args.lattice)
    structures = _enumerate_structures(args, lattice)
    if args.count_only:
        if args.json:
            _write_out(
                _dump_json(
                    {"format": FORMAT_VERSION, "kind": args.what, "count": len(structures)}
                ),
                args.output,
            )
        else:
            _write_out(f"{len(structures)}\n", args.output)
        return 0
    if args.json:
        doc = {
            "format": FORMAT_VERSION,
            "kind": args.what,
            "lattice": lattice.as_dict(),
            "count": len(structures),
            "structures": structures,
        }
        _write_out(_dump_json(doc), args.output)
        return 0
    lines = [f"{args.what} structures on {lattice.n}-element lattice: {len(structures)}"]
    for s in structures:
        if "pairs" in s:
            body = " ".join(f"({x},{y})" for x, y in s["pairs"]) or "(empty)"
        elif "table" in s:
            body = " ".join(str(v) for v in s["table"])
        elif "members" in s:
            body = "{" + ",".join(str(v) for v in s["members"]) + "}"
        else:
            body = json.dumps(s, sort_keys=True)
        lines.append("  " + body)
    _write_out("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    lattice = _load_lattice(args.lattice) if args.lattice else None
    report = verify_suite(
        args.suite,
        lattice,
        m=args.m,
        n=args.n,
        limit=args.max_structures,
        threads=args.threads,
    )
    if args.json:
        doc = report.as_dict()
        doc["format"] = FORMAT_VERSION
        _write_out(_dump_json(doc), args.output)
    else:
        lines = [f"suite {report.suite} on {report.target}"]
        for key in sorted(report.sizes):
            lines.append(f"  {key} = {report.sizes[key]}")
        for check in report.checks:
            mark = "ok  " if check["passed"] else "FAIL"
            line = f"  {mark} {check['name']}"
            if not check["passed"] and "witness" in check:
                line += f"  witness: {check['witness']}"
            lines.append(line)
        lines.append("result: " + ("PASS" if report.passed else "FAIL"))
        _write_out("\n".join(lines) + "\n", args.output)
    return 0 if report.passed else 1


def _cmd_count(args: argparse.Namespace) -> int:
    if args.target == "poly-bernoulli":
        value = poly_bernoulli(args.a, args.b)
        if args.json:
            doc = {"format": FORMAT_VERSION, "a": args.a, "b": args.b, "value": value}
            _write_out(_dump_json(doc), args.output)
        else:
            _write_out(f"{value}\n", args.output)
        return 0
    if args.target == "saturated-grid":
        value = count_saturated_grid(args.m, args.n, check=args.check)
        if args.json:
            doc = {
                "format": FORMAT_VERSION,
                "m": args.m,
                "n": args.n,
                "value": value,
                "checked": bool(args.check),
            }
            _write_out(_dump_json(doc), args.output)
        else:
            _write_out(f"{value}\n", args.output)
        return 0
    if args.target == "report":
        lattice = _load_lattice(args.lattice)
        report = count_report(lattice, limit=args.max_structures)
        if args.json:
            doc = report.as_dict()
            doc["format"] = FORMAT_VERSION
            _write_out(_dump_json(doc), args.output)
        else:
            rows = [
                (kind, report.counts[kind], report.provenance[kind])
                for kind in sorted(report.counts)
            ]
            _write_out(
                _print_table(rows, header=("kind", "count", "provenance")), args.output
            )
        return 0
    raise BadParams(f"unknown count target {args.target!r}")


def _cmd_export(args: argparse.Namespace) -> int:
    lattice = _load_lattice(args.lattice)
    extra: list[tuple[int, int]] = []
    if args.transfer:
        data = _load_json(args.transfer)
        if "lattice" in data:
            other = Lattice.from_dict(data["lattice"])
            if other != lattice:
                raise CarrierMismatch("transfer overlay was built on a different lattice")
        rel = Relation.from_pairs(lattice, [tuple(p) for p in data["pairs"]])
        extra = list(rel.pairs)
    if args.target == "dot":
        _write_out(hasse_dot(lattice, extra_edges=extra), args.output)
        return 0
    if args.target == "json":
        doc = _lattice_doc(lattice)
        if args.transfer:
            doc["transfer"] = [[x, y] for x, y in extra]
        _write_out(_dump_json(doc), args.output)
        return 0
    raise BadParams(f"unknown export target {args.target!r}")


# --- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-structures",
        type=int,
        default=DEFAULT_MAX_STRUCTURES,
        help="abort enumerations past this many structures",
    )
    common.add_argument("--threads", type=int, default=1, help="worker threads")
    common.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="latfac",
        description="Factorization and transfer systems on finite lattices.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_lat = sub.add_parser("lattice", help="construct and inspect lattices")
    lat_sub = p_lat.add_subparsers(dest="action", required=True)
    p_make = lat_sub.add_parser("make", parents=[common], help="build a standard lattice")
    p_make.add_argument("kind", choices=LATTICE_KINDS)
    p_make.add_argument("params", nargs="*", type=int)
    p_make.set_defaults(func=_cmd_lattice)
    p_val = lat_sub.add_parser("validate", parents=[common], help="validate a lattice JSON file")
    p_val.add_argument("file")
    p_val.add_argument("--json", action="store_true")
    p_val.set_defaults(func=_cmd_lattice)
    p_dual = lat_sub.add_parser("dual", parents=[common], help="order-reverse a lattice")
    p_dual.add_argument("file")
    p_dual.set_defaults(func=_cmd_lattice)

    p_enum = sub.add_parser(
        "enumerate", parents=[common], help="enumerate structures on a lattice"
    )
    p_enum.add_argument("what", choices=ENUM_TARGETS)
    p_enum.add_argument("--lattice", required=True)
    p_enum.add_argument("--op", choices=("meet", "join"), default="meet")
    p_enum.add_argument("--count-only", action="store_true")
    p_enum.add_argument("--json", action="store_true")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="run a theorem-verification suite"
    )
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    p_verify.add_argument("--lattice", default=None)
    p_verify.add_argument("--m", type=int, default=None)
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_count = sub.add_parser("count", help="closed-form and enumerated counts")
    count_sub = p_count.add_subparsers(dest="target", required=True)
    p_rep = count_sub.add_parser(
        "report", parents=[common], help="full count report for a lattice"
    )
    p_rep.add_argument("--lattice", required=True)
    p_rep.add_argument("--json", action="store_true")
    p_rep.set_defaults(func=_cmd_count)
    p_pb = count_sub.add_parser(
        "poly-bernoulli", parents=[common], help="one poly-Bernoulli number"
    )
    p_pb.add_argument("--a", type=int, required=True)
    p_pb.add_argument("--b", type=int, required=True)
    p_pb.add_argument("--json", action="store_true")
    p_pb.set_defaults(func=_cmd_count)
    p_sg = count_sub.add_parser(
        "saturated-grid", parents=[common], help="half poly-Bernoulli grid count"
    )
    p_sg.add_argument("--m", type=int, required=True)
    p_sg.add_argument("--n", type=int, required=True)
    p_sg.add_argument("--check", action="store_true")
    p_sg.add_argument("--json", action="store_true")
    p_sg.set_defaults(func=_cmd_count)

    p_export = sub.add_parser("export", parents=[common], help="DOT / JSON exports")
    p_export.add_argument("target", choices=("dot", "json"))
    p_export.add_argument("--lattice", required=True)
    p_export.add_argument("--transfer", default=None)
    p_export.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except LatfacError as exc:
        error = {
            "format": FORMAT_VERSION,
            "error": {"kind": type(exc).__name__, "message": str(exc)},
        }
        sys.stderr.write(_dump_json(error))
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        error = {
            "format": FORMAT_VERSION,
            "error": {"kind": "io", "message": str(exc)},
        }
        sys.stderr.write(_dump_json(error))
        return 1


if __name__ == "__main__":
    sys.exit(main())
