"""Command-line driver: finrings {check,matrix,enumerate,iso,canon,verify-paper}.

Exit codes: 0 success, 1 a checked property is false / a claim is refuted /
a file fails the ring axioms, 2 usage, format or resource errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .claims import run_all
from .enumerate import MAX_ENUM_ORDER, EnumFilter, enumerate_rings
from .errors import FinRingError, FormatError, OrderTooLarge, RingAxiomError
from .iso import are_isomorphic, canonical_form
from .matrices import MatrixGenSpec, matrix_ring
from .properties import PREDICATES, PropertyResult, property_report
from .report import emit_report
from .ringfile import read_ring, write_ring

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


def _witness_text(R, res: PropertyResult) -> str:
    if res.witness is None:
        return ""
    return " ".join(R.label(x) for x in res.witness.elements)


def _fmt_numeric(v) -> str:
    return "" if v is None else str(v)


def cmd_check(args, out) -> int:
    R = read_ring(args.file)
    names = None
    if args.props:
        names = [p.strip() for p in args.props.split(",") if p.strip()]
        known = set(PREDICATES) | {"characteristic", "char4-identities"}
        bad = [p for p in names if p not in known]
        if bad:
            raise FormatError("--props", f"unknown property {bad[0]!r}")
    results = property_report(R, names)
    if args.format == "json":
        doc = {
            "ring": R.name,
            "order": R.order,
            "properties": {
                k: {
                    "verdict": r.verdict,
                    "witness": r.witness.to_dict() if r.witness else None,
                    "numeric": r.numeric,
                }
                for k, r in results.items()
            },
        }
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["property", "verdict", "witness", "numeric"])
        for k, r in results.items():
            w.writerow([k, str(r.verdict).lower(), _witness_text(R, r), _fmt_numeric(r.numeric)])
    else:
        out.write(f"{R.name or 'ring'}: order {R.order}\n")
        width = max(len(k) for k in results)
        for k, r in results.items():
            line = f"  {k:<{width}}  {'yes' if r.verdict else 'no'}"
            if r.numeric is not None:
                line += f"  ({r.numeric})"
            if r.witness is not None and not r.verdict:
                line += f"  witness: {_witness_text(R, r)}"
            out.write(line + "\n")
    # listed properties are assertions; the default report is informational
    if names is not None and not all(r.verdict for r in results.values()):
        return EXIT_FALSE
    return EXIT_OK


def summary_line(R) -> str:
    r = property_report(R, ["commutative", "even-square", "nil"])
    parts = [f"order {R.order}", "commutative" if r["commutative"] else "noncommutative"]
    parts.append("even-square" if r["even-square"] else "not even-square")
    parts.append(f"char {r['characteristic'].numeric}")
    parts.append(f"nil (index {r['nil'].numeric})" if r["nil"] else "not nil")
    return ", ".join(parts)


def cmd_matrix(args, out) -> int:
    name = args.name or f"matrices-mod{args.mod}-dim{args.dim}"
    try:
        spec = MatrixGenSpec.from_literals(args.mod, args.dim, args.gens, closure_cap=args.cap, name=name)
    except ValueError as e:
        raise FormatError("--gens", str(e)) from None
    R = matrix_ring(spec)
    out.write(summary_line(R) + "\n")
    comm = PREDICATES["commutative"](R)
    if not comm:
        a, b = comm.witness.elements
        out.write(
            f"witness: a={R.label(a)} b={R.label(b)} ab={R.label(comm.witness.detail['ab'])} "
            f"ba={R.label(comm.witness.detail['ba'])}\n"
        )
    out.write("elements: " + " | ".join(R.labels) + "\n")
    if args.out:
        write_ring(R, args.out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    flt = EnumFilter.parse(args.filter)
    if not 1 <= args.order <= MAX_ENUM_ORDER:
        raise OrderTooLarge(f"order must be in 1..{MAX_ENUM_ORDER}")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    count = 0
    for R in enumerate_rings(args.order, flt, jobs=args.jobs):
        count += 1
        if args.count_only:
            continue
        if args.out:
            write_ring(R, os.path.join(args.out, f"{R.name}.json"))
        else:
            out.write(f"{R.name} {R.group} {R.provenance['canonical']}\n")
    out.write(f"{count}\n" if args.count_only else f"{count} rings\n")
    return EXIT_OK


def cmd_iso(args, out) -> int:
    R, S = read_ring(args.file1), read_ring(args.file2)
    res = are_isomorphic(R, S)
    if not res:
        out.write(f"not isomorphic: {res.reason}\n")
        return EXIT_FALSE
    out.write("isomorphic\n")
    for i, j in enumerate(res.mapping):
        out.write(f"{R.label(i)} -> {S.label(j)}\n")
    return EXIT_OK


def cmd_canon(args, out) -> int:
    out.write(canonical_form(read_ring(args.file)).hex() + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        report = run_all(args.max_order, jobs=args.jobs)
    except ValueError as e:
        raise FormatError("--max-order", str(e)) from None
    text = emit_report(report, args.format)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
        for c in report.claims:
            out.write(f"{c.id}: {c.verdict}\n")
    else:
        out.write(text)
    if not report.ok:
        for c in report.refuted:
            out.write(f"REFUTED {c.id}: " + json.dumps(c.evidence, sort_keys=True) + "\n")
        return EXIT_FALSE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="finrings", description="Finite ring workbench for even-square rings.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="evaluate ring properties of a RingFile")
    c.add_argument("file")
    c.add_argument("--props", help="comma-separated property names (default: all)")
    c.add_argument("--format", choices=["human", "json", "csv"], default="human")
    c.set_defaults(func=cmd_check)

    m = sub.add_parser("matrix", help="ring generated by integer matrices mod M")
    m.add_argument("--mod", type=int, required=True)
    m.add_argument("--dim", type=int, required=True)
    m.add_argument("--gens", nargs="+", required=True, help='matrix literals like "2,0;0,0"')
    m.add_argument("--cap", type=int, default=4096, help="closure size limit")
    m.add_argument("--name")
    m.add_argument("--out")
    m.set_defaults(func=cmd_matrix)

    e = sub.add_parser("enumerate", help="all rings of a given order up to isomorphism")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--filter")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--out", help="directory for one RingFile per class")
    e.add_argument("--jobs", type=int, default=1)
    e.set_defaults(func=cmd_enumerate)

    i = sub.add_parser("iso", help="isomorphism test between two RingFiles")
    i.add_argument("file1")
    i.add_argument("file2")
    i.set_defaults(func=cmd_iso)

    k = sub.add_parser("canon", help="canonical form digest of a RingFile")
    k.add_argument("file")
    k.set_defaults(func=cmd_canon)

    v = sub.add_parser("verify-paper", help="run the claims suite")
    v.add_argument("--max-order", type=int, default=9)
    v.add_argument("--report")
    v.add_argument("--format", choices=["json", "md"], default="md")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except RingAxiomError as e:
        out.write(json.dumps({"error": "validation", "axiom": e.axiom, "triple": list(e.triple), "detail": str(e)}) + "\n")
        return EXIT_FALSE
    except (FinRingError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def run(argv) -> tuple[int, str]:
    """Run main() capturing standard output; handy for tests."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
