"""Command-line interface.

Exit codes: 0 success, 1 negative answer where a positive one was required
(``decide --assert-member``, a failed ``verify``, a target outside the closure),
2 usage or parse error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from majlab import core
from majlab.classify import (
    SymmetricClass,
    classify_class,
    is_balanced,
    is_chaotic,
    is_partisan,
    is_pseudo_balanced,
    is_tiered,
    is_valence_imbalanced,
)
from majlab.closure import NotInClosureError, decide_fast, decide_lp, enumerate_closure
from majlab.core import (
    ChoiceFunction,
    VoterProfile,
    linear_order,
    majority_outcome,
    tally,
)
from majlab.formats import FormatError, emit_cff_stream, emit_pff, parse_cff, parse_pff
from majlab.synth import synth_any

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3


class InvariantViolation(RuntimeError):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def _load_cff(path: str) -> ChoiceFunction:
    try:
        return parse_cff(_read(path))
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def _load_class(paths: list[str]) -> SymmetricClass:
    gens = [_load_cff(p) for p in paths]
    try:
        return SymmetricClass(gens)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def _fmt_set(s) -> str:
    return "{" + ", ".join(str(x) for x in sorted(s)) + "}"


def _edges(c: ChoiceFunction) -> str:
    return " ".join(f"{w}>{l}" for w, l in c.edges()) or "(none)"


# -- subcommands --------------------------------------------------------------


def cmd_classify(args) -> int:
    c = _load_cff(args.function)
    tiers = is_tiered(c)
    winners = is_partisan(c)
    print(f"candidates: {c.n}")
    print(f"edges: {_edges(c)}")
    print(f"valences: {' '.join(str(v) for v in core.valences(c))}")
    print(f"balanced: {'yes' if is_balanced(c) else 'no'}")
    print(f"partisan: {'yes ' + _fmt_set(winners) if winners is not None else 'no'}")
    if tiers is not None:
        print(f"tiered: yes {' < '.join(_fmt_set(t) for t in tiers)}")
    else:
        print("tiered: no")
    print(f"pseudo-balanced: {'yes' if is_pseudo_balanced(c) else 'no'}")
    print(f"chaotic: {'yes' if is_chaotic(c) else 'no'}")
    dec = is_valence_imbalanced(c)
    if dec is None:
        print("valence-imbalanced: no")
    else:
        print(f"valence-imbalanced: yes (imbalance {dec.imbalance})")
        for vp, q in dec.terms:
            u, w = vp.witness_pair
            print(f"  {q} * {vp.point} tag {vp.tag:+d} from pair ({u}, {w})")
    return EXIT_OK


def cmd_classify_class(args) -> int:
    C = _load_class(args.generator)
    cat = classify_class(C)
    print(f"category: {cat.kind.value}")
    print(f"reason: {cat.reason}")
    if C.stripped_empty:
        note = "changed" if cat.stripping_changed else "unchanged"
        print(f"stripping: all-abstaining generator removed; category {note} "
              f"(literal: {cat.unstripped.value})")
    return EXIT_OK


def _print_certificate(cert) -> None:
    if isinstance(cert, dict):
        for c, w in sorted(cert.items(), key=lambda kv: kv[0].key):
            print(f"  {w} * [{_edges(c)}]")
    elif cert:
        print(f"  {cert}")


def cmd_decide(args) -> int:
    C = _load_class(args.generator)
    d = _load_cff(args.target)
    verdicts = []
    if args.method in ("fast", "both"):
        verdicts.append(decide_fast(C, d))
    if args.method in ("lp", "both"):
        verdicts.append(decide_lp(C, d))
    if len({v.member for v in verdicts}) > 1:
        raise InvariantViolation(f"fast and lp routes disagree on {d.key}")
    member = verdicts[0].member
    print("MEMBER" if member else "NOT-MEMBER")
    print(f"case: {verdicts[0].category.kind.value}")
    for v in verdicts:
        print(f"route {v.route}: {'member' if v.member else 'not member'}")
        if v.member:
            _print_certificate(v.certificate)
    if args.assert_member and not member:
        return EXIT_NO
    return EXIT_OK


def cmd_enumerate(args) -> int:
    C = _load_class(args.generator)
    try:
        members = enumerate_closure(C, check_lp=args.check_lp, max_n=max(5, core.MAX_N))
    except AssertionError as exc:
        raise InvariantViolation(str(exc)) from None
    sys.stdout.write(emit_cff_stream(members))
    return EXIT_OK


def _synthesize(C: SymmetricClass, d: ChoiceFunction):
    report = synth_any(C, d)
    if majority_outcome(report.profile) != d:
        raise InvariantViolation("synthesized profile does not realize the target")
    return report


def _print_report(report) -> None:
    print(f"case: {report.case.kind.value}")
    print(f"voters: {report.total_voters}")
    print(f"distinct voters: {len(report.profile)}")
    print(f"bound: {report.bound}")
    print(f"within bound: {'yes' if report.within_bound else 'no'}")


def cmd_synthesize(args) -> int:
    C = _load_class(args.generator)
    d = _load_cff(args.target)
    report = _synthesize(C, d)
    Path(args.out).write_text(emit_pff(report.profile))
    _print_report(report)
    return EXIT_OK


def cmd_verify(args) -> int:
    p = parse_pff(_read(args.profile))
    d = _load_cff(args.target)
    if p.n != d.n:
        raise FormatError(f"profile has {p.n} candidates, target {d.n}")
    t = tally(p)
    out = majority_outcome(p)
    print(f"voters: {p.total}")
    for x, y in core.pairs(p.n):
        print(f"  {x} vs {y}: {t[x, y]:+d}")
    if out == d:
        print("OK: majority outcome equals target")
        return EXIT_OK
    print(f"MISMATCH: outcome [{_edges(out)}], target [{_edges(d)}]")
    return EXIT_NO


def cmd_bounds(args) -> int:
    C = _load_class(args.generator)
    d = _load_cff(args.target)
    _print_report(_synthesize(C, d))
    return EXIT_OK


def cmd_demo(args) -> int:
    orders = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    p = VoterProfile.of(3, (linear_order(3, o) for o in orders))
    t = tally(p)
    print("voters: " + ", ".join(">".join(map(str, o)) for o in orders))
    print(f"M(0,1) = {t[0, 1]}, M(1,2) = {t[1, 2]}, M(2,0) = {t[2, 0]}")
    print(f"majority outcome: {_edges(majority_outcome(p))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="majlab", description="Majority decisions with abstention.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="predicates of one choice function")
    s.add_argument("--function", required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("classify-class", help="category of a symmetric class")
    s.add_argument("--generator", action="append", required=True)
    s.set_defaults(func=cmd_classify_class)

    s = sub.add_parser("decide", help="closure membership of a target")
    s.add_argument("--generator", action="append", required=True)
    s.add_argument("--target", required=True)
    s.add_argument("--method", choices=("fast", "lp", "both"), default="fast")
    s.add_argument("--assert-member", action="store_true")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("enumerate", help="all closure members as a cff stream")
    s.add_argument("--generator", action="append", required=True)
    s.add_argument("--check-lp", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("synthesize", help="build a profile realizing a target")
    s.add_argument("--generator", action="append", required=True)
    s.add_argument("--target", required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_synthesize)

    s = sub.add_parser("verify", help="check a profile's majority outcome")
    s.add_argument("--profile", required=True)
    s.add_argument("--target", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bounds", help="voters used versus the bound")
    s.add_argument("--generator", action="append", required=True)
    s.add_argument("--target", required=True)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("demo", help="built-in demonstrations")
    s.add_argument("name", choices=("condorcet",))
    s.set_defaults(func=cmd_demo)
    return ap


def main(argv: list[str] | None = None) -> int:
    cap = os.environ.get("MAJLAB_MAX_N")
    if cap:
        if not cap.isdigit():
            print(f"majlab: MAJLAB_MAX_N must be an integer, got {cap!r}", file=sys.stderr)
            return EXIT_USAGE
        core.MAX_N = int(cap)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotInClosureError as exc:
        print(f"majlab: {exc}", file=sys.stderr)
        return EXIT_NO
    except (FormatError, ValueError) as exc:
        print(f"majlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"majlab: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
