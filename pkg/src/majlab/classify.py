"""Predicates on single choice functions and on symmetric classes.

The class taxonomy has five mutually exclusive kinds: trivial, balanced,
partisan, mixed (imbalanced and nonpartisan without a chaotic member) and
chaotic.  Single-function predicates are all invariant under relabeling, so a
class is classified from its generators alone.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from majlab.core import ChoiceFunction, canonical_key, orbit, pairs, valences
from majlab.ratlin import convex_zero_search


def is_balanced(c: ChoiceFunction) -> bool:
    """True iff every candidate has as many wins as losses."""
    return not any(valences(c))


def is_tiered(c: ChoiceFunction) -> tuple[frozenset[int], ...] | None:
    """The tier partition of ``c``, lowest tier first, or ``None``.

    Tiers are the connected components of the undecided graph.  Each component
    has to be undecided internally, every cross-component pair decided, and the
    decisions between components must form a strict total order.
    """
    n = c.n
    comp = [-1] * n
    ncomp = 0
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = ncomp
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in range(n):
                if v != u and comp[v] < 0 and c.weight(u, v) == 0:
                    comp[v] = ncomp
                    queue.append(v)
        ncomp += 1

    # between[a][b] = +1 if component a beats component b
    between = [[0] * ncomp for _ in range(ncomp)]
    for i, j in pairs(n):
        a, b = comp[i], comp[j]
        t = c.weight(i, j)
        if a == b:
            if t != 0:
                return None
            continue
        if t == 0:
            return None
        if between[a][b] == 0:
            between[a][b], between[b][a] = t, -t
        elif between[a][b] != t:
            return None

    wins = [sum(1 for b in range(ncomp) if between[a][b] == 1) for a in range(ncomp)]
    if sorted(wins) != list(range(ncomp)):
        return None  # cyclic between components
    members = [frozenset(x for x in range(n) if comp[x] == a) for a in range(ncomp)]
    return tuple(members[a] for a in sorted(range(ncomp), key=lambda a: wins[a]))


def is_partisan(c: ChoiceFunction) -> frozenset[int] | None:
    """The winning set when ``c`` is exactly 2-tiered, else ``None``."""
    tiers = is_tiered(c)
    if tiers is None or len(tiers) != 2:
        return None
    return tiers[1]


def _reachable(c: ChoiceFunction, src: int) -> set[int]:
    seen = {src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in c.successors(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def is_pseudo_balanced(c: ChoiceFunction) -> bool:
    """True iff every decided edge ``x → y`` lies on a directed cycle."""
    reach = [_reachable(c, x) for x in range(c.n)]
    return all(x in reach[y] for x, y in c.edges())


def is_chaotic(c: ChoiceFunction) -> bool:
    return not is_balanced(c) and is_partisan(c) is None


# -- valence geometry ---------------------------------------------------------


@dataclass(frozen=True)
class ValencePoint:
    """A point ``(val(u) - tag, val(w) + tag)`` where ``weight(u, w) == tag``."""

    point: tuple[int, int]
    tag: int
    witness_pair: tuple[int, int]

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (self.point[0], self.point[1], self.tag)


def valence_pairs(c: ChoiceFunction, tag: int) -> list[ValencePoint]:
    """Valence points with the given tag, one per distinct point.

    Undecided pairs contribute both orientations.  The first ordered pair
    ``(u, w)`` in lexicographic order producing a point is kept as its witness.
    """
    if tag not in (-1, 0, 1):
        raise ValueError(f"tag must be -1, 0 or 1, got {tag}")
    vals = valences(c)
    out: dict[tuple[int, int], ValencePoint] = {}
    for u in range(c.n):
        for w in range(c.n):
            if u == w or c.weight(u, w) != tag:
                continue
            pt = (vals[u] - tag, vals[w] + tag)
            if pt not in out:
                out[pt] = ValencePoint(pt, tag, (u, w))
    return sorted(out.values(), key=lambda v: v.sort_key)


def all_valence_points(c: ChoiceFunction) -> list[ValencePoint]:
    pts = [v for tag in (-1, 0, 1) for v in valence_pairs(c, tag)]
    return sorted(pts, key=lambda v: v.sort_key)


@dataclass(frozen=True)
class ValenceDecomposition:
    terms: tuple[tuple[ValencePoint, Fraction], ...]
    imbalance: Fraction

    def check(self, c: ChoiceFunction) -> bool:
        """Re-verify the defining conditions against ``c``, exactly."""
        vals = valences(c)
        coeffs = [q for _, q in self.terms]
        if sum(coeffs) != 1 or any(not (0 < q <= 1) for q in coeffs):
            return False
        sx = sum(q * v.point[0] for v, q in self.terms)
        sy = sum(q * v.point[1] for v, q in self.terms)
        if (sx, sy) != (0, 0):
            return False
        for v, _ in self.terms:
            u, w = v.witness_pair
            if c.weight(u, w) != v.tag or v.point != (vals[u] - v.tag, vals[w] + v.tag):
                return False
        imb = sum(q for v, q in self.terms if v.tag == 1) - sum(q for v, q in self.terms if v.tag == -1)
        return imb == self.imbalance and imb != 0


def is_valence_imbalanced(c: ChoiceFunction) -> ValenceDecomposition | None:
    """Witness that the origin is a convex combination of tagged valence points
    whose weight on tag +1 differs from the weight on tag -1."""
    pts = all_valence_points(c)
    sol = convex_zero_search([(v.point, v.tag) for v in pts], {1: 1, 0: 0, -1: -1})
    if sol is None:
        return None
    terms = tuple((pts[i], q) for i, q in zip(sol.support, sol.coefficients))
    return ValenceDecomposition(terms, sol.value)


# -- classes ------------------------------------------------------------------


class Category(enum.Enum):
    TRIVIAL = "trivial"
    BALANCED = "balanced"
    PARTISAN = "partisan"
    MIXED = "mixed"
    CHAOTIC = "chaotic"


@dataclass(frozen=True)
class ClassCategory:
    kind: Category
    reason: str
    # category the literal definitions give when all-abstaining generators are kept
    unstripped: Category | None = None

    @property
    def stripping_changed(self) -> bool:
        return self.unstripped is not None and self.unstripped != self.kind

    def __str__(self) -> str:
        return self.kind.value


class SymmetricClass:
    """All relabelings of a finite generator set.

    All-abstaining generators are removed (``stripped_empty`` records that) since
    such voters never move a tally.
    """

    __slots__ = ("n", "generators", "stripped_empty")

    def __init__(self, generators: Iterable[ChoiceFunction], n: int | None = None):
        gens = list(generators)
        ns = {g.n for g in gens}
        if n is not None:
            ns.add(n)
        if len(ns) != 1:
            raise ValueError(f"generators disagree on candidate count: {sorted(ns)}")
        self.n = ns.pop()
        self.stripped_empty = any(g.is_empty for g in gens)
        uniq = {g.key: g for g in gens if not g.is_empty}
        self.generators = tuple(uniq[k] for k in sorted(uniq))

    @classmethod
    def coerce(cls, obj) -> "SymmetricClass":
        if isinstance(obj, SymmetricClass):
            return obj
        return cls(obj)

    def members(self, max_n: int | None = None) -> list[ChoiceFunction]:
        """The full class, sorted by canonical key (includes the empty function
        if one was stripped)."""
        out = {f for g in self.generators for f in orbit(g, max_n)}
        if self.stripped_empty:
            out.add(ChoiceFunction.empty(self.n))
        return sorted(out, key=canonical_key)

    def __repr__(self) -> str:
        return f"SymmetricClass(n={self.n}, generators={[g.key for g in self.generators]})"


def _categorize(gens: Sequence[ChoiceFunction]) -> tuple[Category, str]:
    if not gens:
        return Category.TRIVIAL, "no generator makes a decision"
    if all(is_balanced(g) for g in gens):
        return Category.BALANCED, "every generator is balanced"
    if all(is_partisan(g) is not None for g in gens):
        return Category.PARTISAN, "every generator is partisan"
    chaotic = [g for g in gens if is_chaotic(g)]
    if chaotic:
        return Category.CHAOTIC, f"generator {chaotic[0].key} is chaotic"
    return Category.MIXED, "imbalanced generators are all partisan, nonpartisan ones all balanced"


def _literal_category(gens: Sequence[ChoiceFunction]) -> Category:
    """Category from the definitions applied to the generators as given."""
    if not gens or (len(gens) == 1 and gens[0].is_empty):
        return Category.TRIVIAL
    return _categorize(gens)[0]


def classify_class(C) -> ClassCategory:
    """Classify a symmetric class (or a raw generator list)."""
    raw = list(C.generators) if isinstance(C, SymmetricClass) else list(C)
    cls = SymmetricClass.coerce(C)
    if isinstance(C, SymmetricClass) and C.stripped_empty:
        raw.append(ChoiceFunction.empty(C.n))
    kind, reason = _categorize(cls.generators)
    literal = _literal_category(raw)
    if cls.stripped_empty:
        if literal != kind:
            reason += f"; all-abstaining generator removed (literal reading: {literal.value})"
        else:
            reason += "; all-abstaining generator removed"
    return ClassCategory(kind, reason, literal)
