"""Choice functions, the permutation action, weights and voter profiles.

Candidates are the integers ``0..n-1``.  A choice function stores one trit per
unordered pair ``(i, j)`` with ``i < j``: ``+1`` when ``i`` beats ``j``, ``-1``
when ``j`` beats ``i`` and ``0`` when the pair is undecided (abstention).

Every value here is immutable and every comparison on weights is exact.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

#: Largest candidate count for which full orbits are enumerated.
MAX_N = 7

_KEY_CHARS = {1: "+", 0: "0", -1: "-"}


def pair_index(n: int, i: int, j: int) -> int:
    """Position of the pair ``(i, j)``, ``i < j``, in lexicographic pair order."""
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def pairs(n: int) -> Iterator[tuple[int, int]]:
    return itertools.combinations(range(n), 2)


def _check_candidate(n: int, x: int) -> None:
    if not 0 <= x < n:
        raise IndexError(f"candidate {x} out of range for n={n}")


class ChoiceFunction:
    """A partial antisymmetric decision table on pairs of ``n`` candidates."""

    __slots__ = ("n", "table", "_hash")

    def __init__(self, n: int, table: Sequence[int]):
        if n < 3:
            raise ValueError(f"need at least 3 candidates, got {n}")
        table = tuple(int(t) for t in table)
        if len(table) != n * (n - 1) // 2:
            raise ValueError(f"table has {len(table)} entries, expected {n * (n - 1) // 2}")
        if any(t not in (-1, 0, 1) for t in table):
            raise ValueError("table entries must be -1, 0 or +1")
        self.n = n
        self.table = table
        self._hash = hash((n, table))

    # -- construction -------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "ChoiceFunction":
        return cls(n, (0,) * (n * (n - 1) // 2))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "ChoiceFunction":
        """Build from ``(winner, loser)`` pairs.  Conflicting edges raise."""
        table = [0] * (n * (n - 1) // 2)
        for w, l in edges:
            _check_candidate(n, w)
            _check_candidate(n, l)
            if w == l:
                raise ValueError(f"self pair ({w}, {l})")
            i, j = min(w, l), max(w, l)
            k = pair_index(n, i, j)
            t = 1 if w == i else -1
            if table[k] == -t:
                raise ValueError(f"pair {{{i}, {j}}} decided both ways")
            table[k] = t
        return cls(n, table)

    @classmethod
    def from_key(cls, n: int, key: str) -> "ChoiceFunction":
        inv = {v: k for k, v in _KEY_CHARS.items()}
        return cls(n, [inv[ch] for ch in key])

    # -- access -------------------------------------------------------------

    def weight(self, x: int, y: int) -> int:
        _check_candidate(self.n, x)
        _check_candidate(self.n, y)
        if x == y:
            return 0
        if x < y:
            return self.table[pair_index(self.n, x, y)]
        return -self.table[pair_index(self.n, y, x)]

    def edges(self) -> list[tuple[int, int]]:
        """Decided pairs as ``(winner, loser)``, in lexicographic pair order."""
        out = []
        for (i, j), t in zip(pairs(self.n), self.table):
            if t == 1:
                out.append((i, j))
            elif t == -1:
                out.append((j, i))
        return out

    def successors(self, x: int) -> list[int]:
        return [y for y in range(self.n) if self.weight(x, y) == 1]

    @property
    def is_empty(self) -> bool:
        return not any(self.table)

    @property
    def is_full(self) -> bool:
        return all(self.table)

    @property
    def key(self) -> str:
        return "".join(_KEY_CHARS[t] for t in self.table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChoiceFunction):
            return NotImplemented
        return self.n == other.n and self.table == other.table

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ChoiceFunction(n={self.n}, edges={self.edges()})"


def weight(c: ChoiceFunction, x: int, y: int) -> int:
    """+1 if ``c`` picks ``x`` over ``y``, -1 if it picks ``y``, else 0."""
    return c.weight(x, y)


def canonical_key(c: ChoiceFunction) -> str:
    """Trit string over pairs in lexicographic order, using ``+``, ``0``, ``-``."""
    return c.key


# -- common shapes ------------------------------------------------------------


def linear_order(n: int, order: Sequence[int]) -> ChoiceFunction:
    """Full function where earlier entries of ``order`` beat later ones."""
    if sorted(order) != list(range(n)):
        raise ValueError(f"{order} is not an ordering of range({n})")
    return ChoiceFunction.from_edges(n, itertools.combinations(order, 2))


def cyclic(n: int, cycle: Sequence[int]) -> ChoiceFunction:
    """``cycle[i]`` beats ``cycle[i+1]`` (wrapping), no other decisions."""
    if len(set(cycle)) != len(cycle) or len(cycle) < 3:
        raise ValueError(f"bad cycle {cycle}")
    k = len(cycle)
    return ChoiceFunction.from_edges(n, ((cycle[i], cycle[(i + 1) % k]) for i in range(k)))


def partisan(n: int, winners: Iterable[int]) -> ChoiceFunction:
    """Every member of ``winners`` beats every non-member; nothing else decided."""
    w = set(winners)
    if not w or len(w) >= n:
        raise ValueError("winning set must be a nonempty proper subset")
    return ChoiceFunction.from_edges(n, ((x, y) for x in sorted(w) for y in range(n) if y not in w))


def all_functions(n: int) -> Iterator[ChoiceFunction]:
    """All ``3**C(n,2)`` choice functions, in canonical-key order."""
    m = n * (n - 1) // 2
    # key order is '+' < '-' < '0'
    for table in itertools.product((1, -1, 0), repeat=m):
        yield ChoiceFunction(n, table)


# -- permutations -------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError(f"{self.mapping} is not a bijection")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        m = list(range(n))
        m[a], m[b] = b, a
        return cls(tuple(m))

    @classmethod
    def sending(cls, n: int, assignment: Mapping[int, int]) -> "Permutation":
        """Some permutation with ``p(src) = dst`` for each item of ``assignment``.

        Unassigned sources go to unassigned targets in increasing order.
        """
        m = [-1] * n
        for src, dst in assignment.items():
            m[src] = dst
        if len(set(assignment.values())) != len(assignment):
            raise ValueError("assignment is not injective")
        rest = iter(sorted(set(range(n)) - set(assignment.values())))
        for i in range(n):
            if m[i] < 0:
                m[i] = next(rest)
        return cls(tuple(m))

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: apply ``other`` first."""
        return Permutation(tuple(self.mapping[other.mapping[i]] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(tuple(inv))


def permute(c: ChoiceFunction, sigma: Permutation) -> ChoiceFunction:
    """Relabel ``c`` by ``sigma``: the result picks ``σx`` over ``σy`` iff ``c`` picks ``x`` over ``y``.

    This is a left action, ``permute(permute(c, s), t) == permute(c, t.compose(s))``.
    """
    n = c.n
    if sigma.n != n:
        raise ValueError(f"permutation on {sigma.n} points applied to n={n}")
    table = [0] * len(c.table)
    for (i, j), t in zip(pairs(n), c.table):
        if t:
            a, b = sigma(i), sigma(j)
            if a < b:
                table[pair_index(n, a, b)] = t
            else:
                table[pair_index(n, b, a)] = -t
    return ChoiceFunction(n, table)


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in itertools.permutations(range(n)):
        yield Permutation(p)


def perms_fixing(n: int, fixed: Iterable[int]) -> list[Permutation]:
    """Permutations fixing each element of ``fixed``, in lexicographic order."""
    fixed = set(fixed)
    for x in fixed:
        _check_candidate(n, x)
    free = [i for i in range(n) if i not in fixed]
    out = []
    for image in itertools.permutations(free):
        m = list(range(n))
        for src, dst in zip(free, image):
            m[src] = dst
        out.append(Permutation(tuple(m)))
    return out


def orbit(c: ChoiceFunction, max_n: int | None = None) -> list[ChoiceFunction]:
    """Distinct relabelings of ``c``, sorted by canonical key."""
    cap = MAX_N if max_n is None else max_n
    if c.n > cap:
        raise ValueError(f"orbit enumeration capped at n={cap}, got n={c.n}")
    seen = {permute(c, p) for p in all_permutations(c.n)}
    return sorted(seen, key=canonical_key)


def valence(c: ChoiceFunction, x: int) -> int:
    """Wins minus losses of ``x`` under ``c``."""
    _check_candidate(c.n, x)
    return sum(c.weight(x, y) for y in range(c.n))


def valences(c: ChoiceFunction) -> tuple[int, ...]:
    vals = [0] * c.n
    for (i, j), t in zip(pairs(c.n), c.table):
        vals[i] += t
        vals[j] -= t
    return tuple(vals)


# -- weight matrices ----------------------------------------------------------


class WeightMatrix:
    """Skew-symmetric matrix of exact rationals in ``[-1, 1]``.

    Only the upper triangle is stored; ``m[x, y]`` returns the skew entry.
    """

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Sequence[Fraction | int]):
        entries = tuple(Fraction(e) for e in entries)
        if len(entries) != n * (n - 1) // 2:
            raise ValueError("wrong number of entries")
        if any(abs(e) > 1 for e in entries):
            raise ValueError("entries must lie in [-1, 1]")
        self.n = n
        self.entries = entries

    @classmethod
    def zero(cls, n: int) -> "WeightMatrix":
        return cls(n, (0,) * (n * (n - 1) // 2))

    @classmethod
    def from_function(cls, n: int, f) -> "WeightMatrix":
        """Build from ``f(x, y)`` evaluated on pairs ``x < y``."""
        return cls(n, [f(i, j) for i, j in pairs(n)])

    @classmethod
    def combination(cls, terms: Iterable[tuple[Fraction, ChoiceFunction]]) -> "WeightMatrix":
        """``Σ r · pr(c)`` over ``(r, c)`` terms."""
        terms = list(terms)
        if not terms:
            raise ValueError("empty combination")
        n = terms[0][1].n
        acc = [Fraction(0)] * (n * (n - 1) // 2)
        for r, c in terms:
            r = Fraction(r)
            for k, t in enumerate(c.table):
                if t:
                    acc[k] += r * t
        return cls(n, acc)

    def __getitem__(self, xy: tuple[int, int]) -> Fraction:
        x, y = xy
        _check_candidate(self.n, x)
        _check_candidate(self.n, y)
        if x == y:
            return Fraction(0)
        if x < y:
            return self.entries[pair_index(self.n, x, y)]
        return -self.entries[pair_index(self.n, y, x)]

    def row_sum(self, x: int) -> Fraction:
        return sum((self[x, y] for y in range(self.n)), Fraction(0))

    def is_balanced(self) -> bool:
        return all(self.row_sum(x) == 0 for x in range(self.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.n, self.entries))

    def __repr__(self) -> str:
        return f"WeightMatrix(n={self.n}, entries={[str(e) for e in self.entries]})"


def pr(c: ChoiceFunction) -> WeightMatrix:
    """The pairwise weights of ``c`` as an exact matrix."""
    return WeightMatrix(c.n, c.table)


def maj(t: WeightMatrix) -> ChoiceFunction:
    """Decide ``x`` over ``y`` exactly when ``t[x, y] > 0``."""
    return ChoiceFunction(t.n, [(e > 0) - (e < 0) for e in t.entries])


# -- profiles and tallies -----------------------------------------------------


@dataclass(frozen=True)
class IntTally:
    """Skew-symmetric integer matrix of net votes, upper triangle stored."""

    n: int
    entries: tuple[int, ...]

    def __getitem__(self, xy: tuple[int, int]) -> int:
        x, y = xy
        _check_candidate(self.n, x)
        _check_candidate(self.n, y)
        if x == y:
            return 0
        if x < y:
            return self.entries[pair_index(self.n, x, y)]
        return -self.entries[pair_index(self.n, y, x)]

    def __add__(self, other: "IntTally") -> "IntTally":
        if self.n != other.n:
            raise ValueError("tallies over different candidate counts")
        return IntTally(self.n, tuple(a + b for a, b in zip(self.entries, other.entries)))


class VoterProfile:
    """Multiset of choice functions with arbitrary-precision multiplicities.

    Entries are kept sorted by canonical key; duplicates are merged.
    """

    __slots__ = ("n", "_counts")

    def __init__(self, n: int, entries: Iterable[tuple[ChoiceFunction, int]] = ()):
        counts: dict[ChoiceFunction, int] = {}
        for c, mult in entries:
            if c.n != n:
                raise ValueError(f"voter on {c.n} candidates in profile with n={n}")
            mult = int(mult)
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            counts[c] = counts.get(c, 0) + mult
        self.n = n
        self._counts = dict(sorted(counts.items(), key=lambda kv: kv[0].key))

    @classmethod
    def of(cls, n: int, voters: Iterable[ChoiceFunction]) -> "VoterProfile":
        return cls(n, ((c, 1) for c in voters))

    @property
    def entries(self) -> list[tuple[ChoiceFunction, int]]:
        return list(self._counts.items())

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def __len__(self) -> int:
        return len(self._counts)

    def multiplicity(self, c: ChoiceFunction) -> int:
        return self._counts.get(c, 0)

    def union(self, other: "VoterProfile") -> "VoterProfile":
        if self.n != other.n:
            raise ValueError("profiles over different candidate counts")
        return VoterProfile(self.n, itertools.chain(self.entries, other.entries))

    __or__ = union

    def scaled(self, k: int) -> "VoterProfile":
        """``k`` copies of every voter.  ``k = 0`` gives the empty profile."""
        if k < 0:
            raise ValueError("negative scale")
        if k == 0:
            return VoterProfile(self.n)
        return VoterProfile(self.n, ((c, m * k) for c, m in self.entries))

    def relabeled(self, sigma: Permutation) -> "VoterProfile":
        return VoterProfile(self.n, ((permute(c, sigma), m) for c, m in self.entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VoterProfile):
            return NotImplemented
        return self.n == other.n and self._counts == other._counts

    def __repr__(self) -> str:
        return f"VoterProfile(n={self.n}, voters={self.total}, distinct={len(self)})"


def union_all(n: int, profiles: Iterable[VoterProfile]) -> VoterProfile:
    return VoterProfile(n, itertools.chain.from_iterable(p.entries for p in profiles))


def tally(p: VoterProfile) -> IntTally:
    acc = [0] * (p.n * (p.n - 1) // 2)
    for c, mult in p.entries:
        for k, t in enumerate(c.table):
            if t:
                acc[k] += mult * t
    return IntTally(p.n, tuple(acc))


def majority_outcome(p: VoterProfile) -> ChoiceFunction:
    """Strict simple majority on every pair; exact ties are left undecided."""
    return ChoiceFunction(p.n, [(e > 0) - (e < 0) for e in tally(p).entries])


def lcm_all(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v)
    return out
