"""Majority-closure membership.

Two independent routes decide whether a target ``d`` is the strict majority
outcome of some finite electorate drawn from a symmetric class:

* :func:`decide_fast` reads the answer off the four-case characterization;
* :func:`decide_lp` solves the weight-feasibility problem directly with an exact
  LP over the whole orbit and never looks at the classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from majlab.classify import (
    Category,
    ClassCategory,
    SymmetricClass,
    classify_class,
    is_pseudo_balanced,
    is_tiered,
)
from majlab.core import (
    ChoiceFunction,
    VoterProfile,
    WeightMatrix,
    all_functions,
    canonical_key,
    lcm_all,
    maj,
)
from majlab.ratlin import LinearProgram, lp_maximize


class NotInClosureError(ValueError):
    """The requested outcome cannot be produced by the class."""


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    route: str  # "fast" | "lp"
    category: ClassCategory
    # lp route: nonzero weights over orbit members; fast route: predicate name
    certificate: dict[ChoiceFunction, Fraction] | str | None = None


def _check_n(C: SymmetricClass, d: ChoiceFunction) -> None:
    if C.n != d.n:
        raise ValueError(f"class on {C.n} candidates, target on {d.n}")


def decide_fast(C, d: ChoiceFunction) -> MembershipVerdict:
    C = SymmetricClass.coerce(C)
    _check_n(C, d)
    cat = classify_class(C)
    if cat.kind is Category.TRIVIAL:
        return MembershipVerdict(d.is_empty, "fast", cat, "makes no decisions")
    if cat.kind is Category.BALANCED:
        return MembershipVerdict(is_pseudo_balanced(d), "fast", cat, "is_pseudo_balanced")
    if cat.kind is Category.PARTISAN:
        return MembershipVerdict(is_tiered(d) is not None, "fast", cat, "is_tiered")
    return MembershipVerdict(True, "fast", cat, "every function")


def membership_lp(members: list[ChoiceFunction], d: ChoiceFunction) -> tuple[LinearProgram, int]:
    """The LP for ``d`` over explicit class members.

    Variables: one weight per member, then the margin ``δ``, one surplus per
    decided pair of ``d`` and a cap slack.  Returns the program and the index of
    ``δ``.
    """
    k = len(members)
    decided = [(p, t) for p, t in enumerate(d.table) if t]
    undecided = [p for p, t in enumerate(d.table) if not t]
    delta = k
    nvars = k + 1 + len(decided) + 1
    rows, rhs = [], []

    rows.append([1] * k + [0] * (nvars - k))
    rhs.append(1)
    for s, (p, t) in enumerate(decided):
        row = [t * c.table[p] for c in members] + [0] * (nvars - k)
        row[delta] = -1
        row[k + 1 + s] = -1
        rows.append(row)
        rhs.append(0)
    for p in undecided:
        rows.append([c.table[p] for c in members] + [0] * (nvars - k))
        rhs.append(0)
    cap = [0] * nvars
    cap[delta] = 1
    cap[-1] = 1
    rows.append(cap)
    rhs.append(1)

    objective = [0] * nvars
    objective[delta] = 1
    return LinearProgram.build(nvars, rows, rhs, objective), delta


def decide_lp(C, d: ChoiceFunction, max_n: int | None = None) -> MembershipVerdict:
    """Maximize the smallest winning margin over convex weightings of the orbit;
    ``d`` is achievable iff that margin is positive."""
    C = SymmetricClass.coerce(C)
    _check_n(C, d)
    # an empty electorate ties everywhere, so the empty function stands in for a class with no members
    members = C.members(max_n) or [ChoiceFunction.empty(C.n)]
    cat = classify_class(C)  # reported only
    lp, delta = membership_lp(members, d)
    res = lp_maximize(lp)
    if not res.optimal or res.value <= 0:
        return MembershipVerdict(False, "lp", cat, None)
    weights = {c: res.assignment[i] for i, c in enumerate(members) if res.assignment[i]}
    return MembershipVerdict(True, "lp", cat, weights)


def weighted_outcome(weights: Mapping[ChoiceFunction, Fraction]) -> ChoiceFunction:
    return maj(WeightMatrix.combination((w, c) for c, w in weights.items()))


def weights_to_profile(weights: Mapping[ChoiceFunction, Fraction]) -> VoterProfile:
    """Integer electorate with the same majority outcome as a rational weighting.

    Multiplicities are ``weight × m`` with ``m`` the lcm of all denominators.
    """
    if not weights:
        raise ValueError("no weights")
    ws = {c: Fraction(w) for c, w in weights.items()}
    if any(w < 0 for w in ws.values()):
        raise ValueError("negative weight")
    if sum(ws.values()) != 1:
        raise ValueError(f"weights sum to {sum(ws.values())}, not 1")
    n = next(iter(ws)).n
    m = lcm_all(w.denominator for w in ws.values())
    return VoterProfile(n, ((c, w * m) for c, w in ws.items() if w))


def enumerate_closure(C, check_lp: bool = False, max_n: int = 5) -> list[ChoiceFunction]:
    """Every member of the closure, in canonical-key order.

    With ``check_lp`` each target is re-decided by the LP route and any
    disagreement raises ``AssertionError``.
    """
    C = SymmetricClass.coerce(C)
    if C.n > max_n:
        raise ValueError(f"closure enumeration capped at n={max_n}, got n={C.n}")
    out = []
    for d in all_functions(C.n):
        fast = decide_fast(C, d).member
        if check_lp and decide_lp(C, d).member != fast:
            raise AssertionError(f"fast and lp routes disagree on {d.key}")
        if fast:
            out.append(d)
    return sorted(out, key=canonical_key)
