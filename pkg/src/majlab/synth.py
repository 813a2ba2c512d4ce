"""Explicit electorates realizing closure members.

Each constructor follows the constructive argument for its case and returns a
:class:`~majlab.core.VoterProfile` whose strict majority outcome is the target.
Profiles are multiplicity maps, so factorial-sized electorates stay cheap.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from majlab.classify import (
    Category,
    ClassCategory,
    SymmetricClass,
    classify_class,
    is_balanced,
    is_chaotic,
    is_partisan,
    is_pseudo_balanced,
    is_tiered,
    is_valence_imbalanced,
)
from majlab.closure import NotInClosureError, decide_fast, weights_to_profile
from majlab.core import (
    ChoiceFunction,
    Permutation,
    VoterProfile,
    partisan,
    perms_fixing,
    permute,
    tally,
    union_all,
)


def _binom(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


# -- cycles -------------------------------------------------------------------


def smallest_cycle(c: ChoiceFunction) -> list[int]:
    """A shortest directed cycle, as the lexicographically smallest vertex
    sequence starting at its smallest vertex."""
    n = c.n
    succ = [c.successors(x) for x in range(n)]

    def extend(path: list[int], length: int) -> list[int] | None:
        last = path[-1]
        if len(path) == length:
            return path if path[0] in succ[last] else None
        for v in succ[last]:
            if v > path[0] and v not in path:
                found = extend(path + [v], length)
                if found:
                    return found
        return None

    for length in range(3, n + 1):
        for s in range(n):
            found = extend([s], length)
            if found:
                return found
    raise ValueError(f"{c!r} has no directed cycle")


def cycle_through_edge(d: ChoiceFunction, x: int, y: int) -> list[int]:
    """A shortest directed cycle using the edge ``x → y``, listed from ``x``.

    Among shortest cycles the lexicographically smallest continuation is taken.
    """
    if d.weight(x, y) != 1:
        raise ValueError(f"{x} does not beat {y}")
    n = d.n
    # dist[v]: length of a shortest path v -> x
    dist = [None] * n
    dist[x] = 0
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for v in range(n):
            if dist[v] is None and d.weight(v, u) == 1:
                dist[v] = dist[u] + 1
                queue.append(v)
    if dist[y] is None:
        raise ValueError(f"edge {x} -> {y} lies on no directed cycle")
    out = [x, y]
    cur = y
    while dist[cur] > 1:
        cur = next(v for v in d.successors(cur) if dist[v] == dist[cur] - 1)
        out.append(cur)
    return out


# -- balanced classes ---------------------------------------------------------


def _require(C, *kinds: Category) -> tuple[SymmetricClass, ClassCategory]:
    C = SymmetricClass.coerce(C)
    cat = classify_class(C)
    if cat.kind not in kinds:
        names = "/".join(k.value for k in kinds)
        raise ValueError(f"class is {cat.kind.value}, expected {names}")
    return C, cat


def synth_triangle(C, x: int, y: int, z: int) -> VoterProfile:
    """Voters from a balanced class whose outcome is exactly ``x → y → z → x``.

    The generator with the shortest cycle is relabeled so that cycle starts
    ``x, y, z``; its three rotations on ``{x, y, z}``, each relabeled by every
    permutation fixing ``x, y, z``, form the electorate.  Nobody votes against a
    triangle edge.
    """
    C, _ = _require(C, Category.BALANCED)
    n = C.n
    if len({x, y, z}) != 3:
        raise ValueError("triangle vertices must be distinct")
    g = min(C.generators, key=lambda f: (len(smallest_cycle(f)), f.key))
    cyc = smallest_cycle(g)
    c = permute(g, Permutation.sending(n, {cyc[0]: x, cyc[1]: y, cyc[2]: z}))
    rotations = [
        c,
        permute(c, Permutation.sending(n, {x: y, y: z, z: x})),
        permute(c, Permutation.sending(n, {x: z, y: x, z: y})),
    ]
    fix = perms_fixing(n, {x, y, z})
    return VoterProfile.of(n, (permute(r, tau) for r in rotations for tau in fix))


def synth_cycle(C, cycle: list[int]) -> VoterProfile:
    """Voters whose outcome is exactly the cycle ``cycle[0] → cycle[1] → … → cycle[0]``.

    Built by gluing a triangle onto the shorter cycle and scaling both parts so
    the chord they share cancels.
    """
    C = SymmetricClass.coerce(C)
    k = len(cycle)
    if len(set(cycle)) != k:
        raise ValueError(f"repeated vertex in {cycle}")
    if k < 3 or k > C.n:
        raise ValueError(f"cycle length {k} outside 3..{C.n}")
    if k == 3:
        return synth_triangle(C, *cycle)
    first, before, last = cycle[0], cycle[-2], cycle[-1]
    p0 = synth_cycle(C, cycle[:-1])
    p1 = synth_triangle(C, first, before, last)
    l0 = tally(p0)[before, first]
    l1 = tally(p1)[first, before]
    L = math.lcm(l0, l1)
    return p0.scaled(L // l0) | p1.scaled(L // l1)


# -- reports ------------------------------------------------------------------


def voter_bound(case: Category | ClassCategory, n: int) -> int:
    """Voter-count upper bound for realizing any closure member."""
    if n < 3:
        raise ValueError("n must be at least 3")
    kind = case.kind if isinstance(case, ClassCategory) else case
    f = math.factorial(n)
    return {
        Category.TRIVIAL: 0,
        Category.BALANCED: 3 * f // 2,
        Category.PARTISAN: n * f,
        Category.MIXED: 5 * n * f // 2,
        Category.CHAOTIC: 16 * n**3 * f,
    }[kind]


@dataclass(frozen=True)
class SynthesisReport:
    profile: VoterProfile
    total_voters: int
    case: ClassCategory
    bound: int
    within_bound: bool

    @classmethod
    def make(cls, profile: VoterProfile, case: ClassCategory) -> "SynthesisReport":
        bound = voter_bound(case, profile.n)
        total = profile.total
        return cls(profile, total, case, bound, total <= bound)


def synth_pseudo_balanced(C, d: ChoiceFunction) -> SynthesisReport:
    """One cycle per decided edge of ``d``, each realized by :func:`synth_cycle`."""
    C, cat = _require(C, Category.BALANCED)
    if not is_pseudo_balanced(d):
        raise NotInClosureError("not in closure: target is not pseudo-balanced")
    parts = [synth_cycle(C, cycle_through_edge(d, x, y)) for x, y in d.edges()]
    return SynthesisReport.make(union_all(C.n, parts), cat)


# -- partisan classes ---------------------------------------------------------


def synth_tiered(C, d: ChoiceFunction) -> SynthesisReport:
    """For tier ``i`` (1 = lowest), each ``x`` in it and each permutation fixing
    ``x``, add ``i`` copies of the generator relabeled to put ``x`` among the winners."""
    C, cat = _require(C, Category.PARTISAN)
    tiers = is_tiered(d)
    if tiers is None:
        raise NotInClosureError("not in closure: target is not tiered")
    n = C.n
    c = C.generators[0]
    winners = is_partisan(c)
    entries = []
    for i, tier in enumerate(tiers, start=1):
        for x in sorted(tier):
            cx = c if x in winners else permute(c, Permutation.transposition(n, x, min(winners)))
            entries.extend((permute(cx, sigma), i) for sigma in perms_fixing(n, {x}))
    return SynthesisReport.make(VoterProfile(n, entries), cat)


# -- mixed classes ------------------------------------------------------------


def mixed_coefficients(n: int, l: int) -> tuple[int, int, int, int]:
    """Copies ``(k0, k1, k2)`` of the partisan families and the common margin ``k``."""
    if 2 * l <= n:
        k0, k1, k2 = n - 2 * l, 0, n - 2
    else:
        k0, k1, k2 = 0, 2 * l - n, n - 2
    k = k0 * _binom(n - 2, l - 1) + k2 * _binom(n - 3, l - 2)
    return k0, k1, k2, k


def _edge_population_mixed(
    balanced: SymmetricClass, c: ChoiceFunction, b: int, a: int, reduce: bool
) -> VoterProfile:
    n = balanced.n
    l = len(is_partisan(c))
    others = [z for z in range(n) if z not in (a, b)]
    triangles = union_all(n, (synth_triangle(balanced, a, z, b) for z in others))
    # votes for a over z inside each triangle population (identical for every z)
    m = tally(synth_triangle(balanced, a, others[0], b))[a, others[0]]
    k0, k1, k2, k = mixed_coefficients(n, l)
    if reduce:
        g = math.gcd(m, k)
        m, k = m // g, k // g

    def family(pred) -> VoterProfile:
        return VoterProfile.of(
            n, (partisan(n, W) for W in itertools.combinations(range(n), l) if pred(set(W)))
        )

    lose_a = family(lambda W: a not in W)
    win_b = family(lambda W: b in W)
    both = family(lambda W: b in W and a not in W)
    return (
        triangles.scaled(k)
        | lose_a.scaled(m * k0)
        | win_b.scaled(m * k1)
        | both.scaled(m * k2)
    )


def synth_mixed(C, d: ChoiceFunction, reduce: bool = True) -> SynthesisReport:
    """Per decided edge ``b → a``: triangles ``a → z → b → a`` from the balanced
    generators for every other ``z``, balanced against partisan voters so only
    ``b`` over ``a`` survives.  ``reduce`` divides both copy counts by their gcd."""
    C, cat = _require(C, Category.MIXED)
    balanced = SymmetricClass([g for g in C.generators if is_balanced(g)])
    c = next(g for g in C.generators if is_partisan(g) is not None)
    parts = [_edge_population_mixed(balanced, c, b, a, reduce) for b, a in d.edges()]
    return SynthesisReport.make(union_all(C.n, parts), cat)


# -- chaotic classes ----------------------------------------------------------


def single_edge_weights(c: ChoiceFunction, x: int, y: int) -> tuple[dict[ChoiceFunction, Fraction], Fraction]:
    """Rational weights over relabelings of ``c`` deciding only ``{x, y}``.

    Returns the weights and the resulting net weight of ``x`` over ``y``.
    """
    dec = is_valence_imbalanced(c)
    if dec is None:
        raise ValueError(f"{c!r} is not valence-imbalanced")
    n = c.n
    fix = perms_fixing(n, {x, y})
    weights: dict[ChoiceFunction, Fraction] = {}
    for vp, q in dec.terms:
        u, w = vp.witness_pair
        sigma = Permutation.sending(n, {u: x, w: y})
        share = q / len(fix)
        for tau in fix:
            f = permute(c, tau.compose(sigma))
            weights[f] = weights.get(f, Fraction(0)) + share
    return weights, dec.imbalance


def synth_single_edge(C, x: int, y: int, winner: int | None = None) -> VoterProfile:
    """Voters deciding only the pair ``{x, y}``, in favour of ``winner`` (default ``x``)."""
    C, _ = _require(C, Category.CHAOTIC)
    if x == y:
        raise ValueError("need two distinct candidates")
    winner = x if winner is None else winner
    if winner not in (x, y):
        raise ValueError(f"winner {winner} is not in {{{x}, {y}}}")
    c = next(g for g in C.generators if is_chaotic(g))
    weights, imbalance = single_edge_weights(c, x, y)
    profile = weights_to_profile(weights)
    if (imbalance > 0) != (winner == x):
        profile = profile.relabeled(Permutation.transposition(C.n, x, y))
    return profile


def synth_chaotic(C, d: ChoiceFunction) -> SynthesisReport:
    C, cat = _require(C, Category.CHAOTIC)
    parts = [synth_single_edge(C, w, l) for w, l in d.edges()]
    return SynthesisReport.make(union_all(C.n, parts), cat)


# -- dispatch -----------------------------------------------------------------


def synth_any(C, d: ChoiceFunction) -> SynthesisReport:
    C = SymmetricClass.coerce(C)
    verdict = decide_fast(C, d)
    if not verdict.member:
        raise NotInClosureError(f"not in closure: {d.key} for a {verdict.category.kind.value} class")
    kind = verdict.category.kind
    if kind is Category.TRIVIAL:
        return SynthesisReport.make(VoterProfile(C.n), verdict.category)
    if kind is Category.BALANCED:
        return synth_pseudo_balanced(C, d)
    if kind is Category.PARTISAN:
        return synth_tiered(C, d)
    if kind is Category.MIXED:
        return synth_mixed(C, d)
    return synth_chaotic(C, d)
