"""Acceptance gate.

Each criterion is a ``check_*`` function that raises ``AssertionError`` on
failure and returns a one-line summary otherwise.  Under pytest the results are
echoed in an "acceptance criteria" section at the end of the run; run this file
directly to get the same lines on stdout.
"""

import functools
import itertools
import math
import random
import sys
import time
from collections import Counter
from fractions import Fraction

import pytest
from conftest import (
    ACCEPTANCE_RESULTS,
    class_fixtures,
    pseudo_balanced_oracle,
    tiered_functions_oracle,
    triangle,
)

from majlab.classify import (
    Category,
    classify_class,
    is_balanced,
    is_chaotic,
    is_partisan,
    is_pseudo_balanced,
    is_tiered,
    is_valence_imbalanced,
    valence_pairs,
)
from majlab.closure import decide_fast, decide_lp, enumerate_closure
from majlab.core import (
    ChoiceFunction,
    VoterProfile,
    WeightMatrix,
    all_functions,
    cyclic,
    linear_order,
    maj,
    majority_outcome,
    partisan,
    pr,
    tally,
    valence,
    valences,
)
from majlab.synth import synth_any, voter_bound

SAMPLES_N5 = 200
RANDOM_FUNCTIONS = 2000


def _random_function(rng: random.Random, n: int) -> ChoiceFunction:
    return ChoiceFunction(n, [rng.choice((-1, 0, 1)) for _ in range(n * (n - 1) // 2)])


# -- 1 ------------------------------------------------------------------------


def check_routes_agree():
    counts = {}
    for n in (3, 4):
        fixtures = class_fixtures(n)
        kinds = {classify_class(g).kind for g in fixtures.values()}
        assert len(fixtures) >= 6, f"only {len(fixtures)} fixtures at n={n}"
        assert kinds == set(Category), f"categories covered at n={n}: {kinds}"
        t0 = time.perf_counter()
        for name, gens in fixtures.items():
            for d in all_functions(n):
                fast = decide_fast(gens, d).member
                lp = decide_lp(gens, d).member
                assert fast == lp, f"n={n} {name} target {d.key}: fast={fast} lp={lp}"
        counts[n] = (len(fixtures), time.perf_counter() - t0)
    return "; ".join(f"n={n}: {k} classes x {3 ** (n * (n - 1) // 2)} targets agree ({s:.1f}s)"
                     for n, (k, s) in counts.items())


# -- 2 ------------------------------------------------------------------------


def check_balanced_closure():
    got = enumerate_closure([triangle(3)])
    expected = {ChoiceFunction.empty(3), triangle(3), cyclic(3, [0, 2, 1])}
    assert set(got) == expected and len(got) == 3
    oracle4 = {d for d in all_functions(4) if pseudo_balanced_oracle(d)}
    predicate4 = {d for d in all_functions(4) if is_pseudo_balanced(d)}
    assert oracle4 == predicate4
    for gens in ([triangle(4)], [cyclic(4, [0, 1, 2, 3])], [triangle(4), cyclic(4, [0, 2, 1, 3])]):
        assert set(enumerate_closure(gens)) == oracle4
    return f"n=3 closure has 3 members; n=4 closures equal the {len(oracle4)} pseudo-balanced functions"


# -- 3 ------------------------------------------------------------------------


def _ordered_partitions(n: int) -> int:
    # Fubini numbers: a(n) = sum_k C(n, k) a(n - k)
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(math.comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


def check_partisan_closure():
    sizes = {}
    for n, expected in ((3, 13), (4, 75)):
        got = set(enumerate_closure([partisan(n, [0])]))
        assert got == tiered_functions_oracle(n)
        assert got == {d for d in all_functions(n) if is_tiered(d) is not None}
        assert len(got) == expected == _ordered_partitions(n)
        sizes[n] = len(got)
    return f"closure sizes {sizes[3]} (n=3) and {sizes[4]} (n=4)"


# -- 4, 5 ---------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _targets(n: int, name: str) -> tuple[ChoiceFunction, ...]:
    members = enumerate_closure(class_fixtures(n)[name])
    if n <= 4 or len(members) <= SAMPLES_N5:
        return tuple(members)
    rng = random.Random(f"{n}:{name}")
    return tuple(rng.sample(members, SAMPLES_N5))


@functools.lru_cache(maxsize=None)
def _synthesized(n: int):
    """(fixture, target, report) for every target tried at size n."""
    out = []
    for name, gens in class_fixtures(n).items():
        for d in _targets(n, name):
            out.append((name, d, synth_any(gens, d)))
    return out


def check_synthesis_soundness():
    parts = []
    for n in (3, 4, 5):
        runs = _synthesized(n)
        for name, d, report in runs:
            assert majority_outcome(report.profile) == d, f"n={n} {name} target {d.key}"
        parts.append(f"n={n}: {len(runs)} profiles exact")
    return "; ".join(parts)


def check_bounds():
    worst = {}
    for n in (3, 4, 5):
        for name, d, report in _synthesized(n):
            bound = voter_bound(report.case, n)
            assert report.total_voters <= bound, f"n={n} {name} {d.key}: {report.total_voters} > {bound}"
            kind = report.case.kind
            if bound:
                ratio = Fraction(report.total_voters, bound)
                worst[kind] = max(worst.get(kind, ratio), ratio)
    summary = ", ".join(f"{k.value} {float(r):.3f}" for k, r in sorted(worst.items(), key=lambda kv: kv[0].value))
    return f"all within bound; worst voters/bound: {summary}"


# -- 6 ------------------------------------------------------------------------


def _raw_pairs(c: ChoiceFunction, tag: int) -> Counter:
    vals = valences(c)
    return Counter(
        (vals[u] - tag, vals[w] + tag)
        for u in range(c.n)
        for w in range(c.n)
        if u != w and c.weight(u, w) == tag
    )


def _valence_properties(c: ChoiceFunction) -> None:
    # reflection
    for tag in (-1, 0, 1):
        mirrored = Counter({(b, a): k for (a, b), k in _raw_pairs(c, -tag).items()})
        assert _raw_pairs(c, tag) == mirrored, c.key
        assert {v.point for v in valence_pairs(c, tag)} == set(mirrored), c.key

    imbalanced = not is_balanced(c)
    if imbalanced:
        v1 = {v.point for v in valence_pairs(c, 1)}
        v0 = {v.point for v in valence_pairs(c, 0)}
        on_lines = len({b - a for a, b in v1}) == 1 and all(a == b for a, b in v0)
        assert on_lines == (is_partisan(c) is not None), c.key

        ranked = sorted(valences(c), reverse=True)
        assert ranked[0] + ranked[1] > 0 and ranked[-1] + ranked[-2] < 0, c.key
        sums = {a + b for tag in (-1, 0, 1) for a, b in _raw_pairs(c, tag)}
        assert max(sums) > 0 > min(sums), c.key

    dec = is_valence_imbalanced(c)
    if is_chaotic(c):
        assert dec is not None, c.key
    if dec is not None:
        assert dec.check(c), c.key
        vals = valences(c)
        coeffs = [q for _, q in dec.terms]
        assert sum(coeffs) == 1 and all(q > 0 for q in coeffs)
        assert sum(q * v.point[0] for v, q in dec.terms) == 0
        assert sum(q * v.point[1] for v, q in dec.terms) == 0
        for v, _ in dec.terms:
            u, w = v.witness_pair
            assert c.weight(u, w) == v.tag
            assert v.point == (vals[u] - v.tag, vals[w] + v.tag)
        r = {t: sum(q for v, q in dec.terms if v.tag == t) for t in (-1, 1)}
        assert r[1] != r[-1] and dec.imbalance == r[1] - r[-1]


def check_valence_suite():
    counts = Counter()
    for n in (3, 4):
        for c in all_functions(n):
            _valence_properties(c)
            counts[n] += 1
    for n in (5, 6):
        rng = random.Random(n)
        for _ in range(RANDOM_FUNCTIONS):
            _valence_properties(_random_function(rng, n))
            counts[n] += 1
    return ", ".join(f"n={n}: {k} functions" for n, k in sorted(counts.items()))


# -- 7 ------------------------------------------------------------------------


def _imbalanced_majority_matrix(n: int, x: int = 0, z: int = 1) -> WeightMatrix:
    q = Fraction(1, n - 2)

    def entry(i, j):
        if (i, j) == (z, x):
            return 1
        if (i, j) == (x, z):
            return -1
        if i == x or j == z:  # x beats y, y beats z, for y outside {x, z}
            return q
        if j == x or i == z:
            return -q
        return 0

    return WeightMatrix.from_function(n, entry)


def check_core_algebra():
    for n in (3, 4):
        for c in all_functions(n):
            t = pr(c)
            assert maj(t) == c
            assert is_balanced(c) == t.is_balanced()
        for trits in itertools.product((-1, 0, 1), repeat=n * (n - 1) // 2):
            t = WeightMatrix(n, trits)
            assert pr(maj(t)) == t
            assert t.is_balanced() == is_balanced(maj(t))
    seen = []
    for n in (4, 5, 6):
        t = _imbalanced_majority_matrix(n)
        assert t.is_balanced()
        v = valence(maj(t), 0)
        assert v == n - 3
        seen.append(v)
    return f"round trips exact at n=3,4; balanced matrix gives majority valence {seen} at n=4,5,6"


# -- 8 ------------------------------------------------------------------------


def check_condorcet():
    p = VoterProfile.of(3, [linear_order(3, o) for o in ((0, 1, 2), (1, 2, 0), (2, 0, 1))])
    t = tally(p)
    assert (t[0, 1], t[1, 2], t[2, 0]) == (1, 1, 1)
    assert majority_outcome(p) == triangle(3)
    return "M(0,1) = M(1,2) = M(2,0) = 1, outcome is the 3-cycle"


CRITERIA = {
    1: ("four-case characterization, fast vs lp", check_routes_agree),
    2: ("balanced closure contents", check_balanced_closure),
    3: ("partisan closure contents", check_partisan_closure),
    4: ("synthesis soundness", check_synthesis_soundness),
    5: ("voter-count bounds", check_bounds),
    6: ("valence geometry properties", check_valence_suite),
    7: ("core algebra", check_core_algebra),
    8: ("condorcet demo", check_condorcet),
}


def run_criterion(num: int) -> tuple[bool, str]:
    title, check = CRITERIA[num]
    try:
        ok, detail = True, f"{title}: {check()}"
    except AssertionError as exc:
        ok, detail = False, f"{title}: {exc or 'assertion failed'}"
    ACCEPTANCE_RESULTS[num] = (ok, detail)
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
    return ok, detail


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    ok, detail = run_criterion(num)
    assert ok, detail


if __name__ == "__main__":
    results = [run_criterion(num)[0] for num in sorted(CRITERIA)]
    sys.exit(0 if all(results) else 1)
