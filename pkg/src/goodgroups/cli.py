"""Command-line interface: ``goodgroups build|report|check-good|classify|verify-paper``.

Exit codes: 0 success (Good / full agreement), 1 Bad or disagreement,
2 resource-limited (Unknown), 3 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import GF2, field_from_name
from .classifier import decide, load_group, report_for, run_paper_verification, theorem_classify
from .groups import GroupError, structural_report
from .presentation import PresentationError
from .units import max_dim_default, workers_default

EXIT_OK, EXIT_BAD, EXIT_UNKNOWN, EXIT_INPUT = 0, 1, 2, 3


def _emit(obj, out: str | None = None) -> None:
    text = json.dumps(obj, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_build(args) -> int:
    name, g = load_group(args.group)
    data = g.to_json()
    if args.out:
        _emit(data, args.out)
        print(json.dumps({"group": name, "order": g.order, "out": args.out}))
    else:
        _emit(data)
    return EXIT_OK


def cmd_report(args) -> int:
    name, g = load_group(args.group)
    out = {"group": name, **structural_report(g).as_dict(), "generators": list(g.gen_names)}
    out["classification"] = str(theorem_classify(g)) if g.order <= 4096 else None
    _emit(out)
    return EXIT_OK


def cmd_check_good(args) -> int:
    name, g = load_group(args.group)
    field = field_from_name(args.field)
    v = decide(g, field, args.max_dim, args.strategy, args.workers)
    _emit(v.to_json(name, field))
    return {"Good": EXIT_OK, "Bad": EXIT_BAD}.get(v.tag, EXIT_UNKNOWN)


def cmd_classify(args) -> int:
    name, g = load_group(args.group)
    c = theorem_classify(g)
    _emit({"group": name, "order": g.order, "classification": c.tag, "family": c.family, "part": c.part})
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    fields = [field_from_name(f) for f in args.fields.split(",")] if args.fields else [GF2]
    result = run_paper_verification(args.max_dim, fields)
    if args.json:
        result.dump(args.json)
    for r in result.reports:
        mark = "ok" if r.agreement else ("??" if r.verdict.tag == "Unknown" else "XX")
        print(f"[{mark}] {r.name:18} {r.field:6} {r.verdict.tag:8} {r.classification}")
    for c in result.checks:
        mark = {True: "ok", False: "XX", None: "??"}[c.passed]
        print(f"[{mark}] {c.name}: {c.detail}")
    print(f"status {result.status}")
    return result.status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="goodgroups", description="Involutions in modular group algebras of 2-groups.")
    sub = p.add_subparsers(dest="command", required=True)
    group_help = "builtin:NAME(params), a catalog name, a presentation file or a table JSON file"

    b = sub.add_parser("build", help="construct a multiplication table")
    b.add_argument("group", help=group_help)
    b.add_argument("--out", help="write the table JSON here")
    b.set_defaults(func=cmd_build)

    r = sub.add_parser("report", help="structural report")
    r.add_argument("group", help=group_help)
    r.set_defaults(func=cmd_report)

    c = sub.add_parser("check-good", help="decide whether all involutions of V(KG) commute")
    c.add_argument("group", help=group_help)
    c.add_argument("--field", default="gf2", choices=["gf2", "gf4"])
    c.add_argument("--max-dim", type=int, default=None, help="enumeration limit (env GOODGROUPS_MAX_DIM)")
    c.add_argument("--strategy", default="auto", choices=["auto", "exhaustive", "witness"])
    c.add_argument("--workers", type=int, default=None, help="worker processes (env GOODGROUPS_WORKERS)")
    c.set_defaults(func=cmd_check_good)

    k = sub.add_parser("classify", help="place a group in the list of good families")
    k.add_argument("group", help=group_help)
    k.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify-paper", help="run every check and report agreement")
    v.add_argument("--json", help="write the full report here")
    v.add_argument("--max-dim", type=int, default=None)
    v.add_argument("--fields", default=None, help="comma-separated, e.g. gf2,gf4")
    v.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_dim", None) is None and hasattr(args, "max_dim"):
        args.max_dim = max_dim_default()
    if getattr(args, "workers", None) is None and hasattr(args, "workers"):
        args.workers = workers_default()
    try:
        return args.func(args)
    except (PresentationError, GroupError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
