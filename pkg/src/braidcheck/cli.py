"""Command-line entry point: ``braidcheck verify|list|normal-form|enumerate``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .braid import BraidWord, normal_form, simple_to_letters
from .fpgroup import resolve_presentation
from .homenum import SearchBudgetExceeded, enumerate_homs
from .suites import SUITES, list_suites, run_suite

DEFAULT_BATTERY = list(SUITES)


def _verify(args) -> int:
    names = DEFAULT_BATTERY if args.suite == "all" else [args.suite]
    params = {
        "n": args.n,
        "dmax": args.dmax,
        "maxlen": args.maxlen,
        "seed": args.seed,
        "enable_n6": args.enable_n6 or None,
    }
    reports = []
    for name in names:
        report = run_suite(name, **params)
        reports.append(report)
        if not args.quiet:
            print(report.table(), flush=True)
    if args.json:
        payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n")
    failed = [r.suite for r in reports if not r.passed]
    if len(reports) > 1:
        print(f"{len(reports) - len(failed)}/{len(reports)} suites passed" + (f"; failed: {', '.join(failed)}" if failed else ""))
    return 1 if failed else 0


def _list(args) -> int:
    for name, desc in list_suites().items():
        print(f"{name:<16} {desc}")
    return 0


def _normal_form(args) -> int:
    w = BraidWord.parse(args.n, args.word)
    nf = normal_form(w)
    if args.json:
        print(json.dumps({
            "strands": nf.strands,
            "infimum": nf.infimum,
            "factors": [list(p.images) for p in nf.perms],
            "factor_words": [simple_to_letters(s) for s in nf.factors],
        }))
    else:
        print(f"infimum: {nf.infimum}")
        for p, s in zip(nf.perms, nf.factors):
            print(f"  {str(p) or '()':<24} {' '.join(map(str, simple_to_letters(s)))}")
        print(f"canonical length: {nf.canonical_length}")
    return 0


def _enumerate(args) -> int:
    p = resolve_presentation(args.presentation)
    try:
        cls = enumerate_homs(p, args.target_degree, surjective_only=args.surjective,
                             long_running=args.long_running)
    except SearchBudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    print(f"{p.name or args.presentation} -> S{args.target_degree}: {len(cls.classes)} classes, {cls.total} homomorphisms")
    for c in cls.classes:
        print(f"  orbit {c.orbit_size:>4}: " + ", ".join(str(g) or "()" for g in c.representative))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidcheck", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite (or 'all')")
    v.add_argument("suite", choices=DEFAULT_BATTERY + ["all"])
    v.add_argument("--n", type=int)
    v.add_argument("--dmax", type=int)
    v.add_argument("--maxlen", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--json", metavar="PATH")
    v.add_argument("--enable-n6", action="store_true")
    v.add_argument("--quiet", action="store_true")
    v.set_defaults(func=_verify)

    l = sub.add_parser("list", help="list the suites")
    l.set_defaults(func=_list)

    nf = sub.add_parser("normal-form", help="Garside normal form of a braid word")
    nf.add_argument("--n", type=int, required=True)
    nf.add_argument("--word", required=True, help='signed generator indices, e.g. "1 2 -3"')
    nf.add_argument("--json", action="store_true")
    nf.set_defaults(func=_normal_form)

    e = sub.add_parser("enumerate", help="classify homomorphisms into S_m up to conjugacy")
    e.add_argument("--target-degree", type=int, required=True)
    e.add_argument("--presentation", required=True, help="JSON file or built-in name (B4, Gamma0_5, S4, Z2*Z2*Z2, ...)")
    e.add_argument("--surjective", action="store_true")
    e.add_argument("--long-running", action="store_true", help="allow target degree 6")
    e.set_defaults(func=_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
