"""Command-line interface: ``python -m constaqmds {enumerate,build,verify}``.

Exit codes: 0 success, 1 a verification failed, 2 invalid usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import CodeError, EquivalenceViolation
from .defsets import CodeShape
from .oracle import PROVEN_NOT_MDS, containment_crosscheck, verify_family
from .quantum import check_q, enumerate_codes, even_divisors, family_for, odd_divisors


def format_rows(records, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in records], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda", "r", "n", "code"])
        for r in records:
            w.writerow([r.lam, r.r, r.n, r.label])
        return buf.getvalue()
    lines = ["lambda r n code"]
    lines += [f"{r.lam} {r.r} {r.n} {r.label}" for r in records]
    return "\n".join(lines) + "\n"


def cmd_enumerate(args) -> int:
    check_q(args.q)
    records = enumerate_codes(args.q, args.family, r=args.r, new_only=args.range == "new")
    sys.stdout.write(format_rows(records, args.format))
    return 0


def cmd_build(args) -> int:
    code, params = family_for(args.q, args.r, args.d)
    if args.format == "json":
        record = params.to_dict()
        record["code"] = code.to_dict()
        sys.stdout.write(json.dumps(record, indent=2) + "\n")
    else:
        sys.stdout.write(format_rows([params], "text"))
        sys.stdout.write(f"defining set: {list(code.Z.elements)}\n")
        sys.stdout.write(f"generator degree: {code.g.degree}\n")
    return 0


def family_shapes(q, families):
    rs = []
    for fam in families:
        rs += even_divisors(q) if fam == "even" else odd_divisors(q)
    return [CodeShape(q, r) for r in sorted(rs)]


def cmd_verify(args) -> int:
    check_q(args.q)
    families = ("even", "odd") if args.family == "both" else (args.family,)
    failed = False
    reports = []
    for fam in families:
        try:
            results = verify_family(args.q, fam, args.budget, args.seed)
        except EquivalenceViolation as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        for params, res in results:
            failed |= res.result == PROVEN_NOT_MDS
            reports.append({"params": params.to_dict(), "report": res.to_dict()})
            if args.format == "text":
                line = f"{fam} {params.label} {res.result} ({res.method}, {res.subsets_checked} subsets)"
                if res.witness is not None:
                    line += f" witness={list(res.witness)}"
                print(line)
    crosschecks = []
    if args.trials:
        for i, shape in enumerate(family_shapes(args.q, families)):
            try:
                rep = containment_crosscheck(shape, args.trials, args.seed + i)
            except EquivalenceViolation as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 1
            crosschecks.append(rep.to_dict())
            if args.format == "text":
                print(f"crosscheck r={shape.r} n={shape.n}: {rep.agreements}/{rep.trials} agree "
                      f"({rep.true_cases} true, {rep.false_cases} false)")
    if args.format == "json":
        print(json.dumps({"instances": reports, "crosschecks": crosschecks}, indent=2))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="constaqmds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the quantum MDS parameters for q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--family", choices=["even", "odd", "both"], default="both")
    p.add_argument("--r", type=int, default=None, help="restrict to one divisor r of q+1")
    p.add_argument("--range", choices=["new", "all"], default="new",
                   help="'new' lists the rows of the newly covered distance range (the tables); "
                        "'all' adds the previously known ones")
    p.add_argument("--format", choices=["json", "csv", "text"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("build", help="build one code instance")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="certify distances and dual containment")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--family", choices=["even", "odd", "both"], default="both")
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200, help="random defining sets per family shape (0 to skip)")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CodeError as exc:
        if isinstance(exc, EquivalenceViolation):
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
