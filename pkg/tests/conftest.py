import itertools

import pytest
from hypothesis import strategies as st

from majlab.core import ChoiceFunction, Permutation, cyclic, linear_order, partisan

# results recorded by test_acceptance, echoed at the end of the run
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")


# -- named functions ------------------------------------------------------------


def triangle(n=3):
    return cyclic(n, [0, 1, 2])


def two_edges(n=4):
    """0 beats 1 and 2; nothing else decided.  Chaotic for n >= 4."""
    return ChoiceFunction.from_edges(n, [(0, 1), (0, 2)])


def class_fixtures(n):
    """Generator lists covering all five categories, keyed by name."""
    fx = {
        "trivial": [ChoiceFunction.empty(n)],
        "triangle": [triangle(n)],
        "partisan_l1": [partisan(n, [0])],
        "partisan_l2": [partisan(n, [0, 1])],
        "stripped_triangle": [ChoiceFunction.empty(n), triangle(n)],
        "mixed": [triangle(n), partisan(n, [0])],
        "chaotic_linear": [linear_order(n, range(n))],
    }
    if n >= 4:
        fx["four_cycle"] = [cyclic(n, [0, 1, 2, 3])]
        fx["chaotic_two_edges"] = [two_edges(n)]
        fx["mixed_l2"] = [cyclic(n, [0, 1, 2, 3]), partisan(n, [0, 1])]
    if n >= 5:
        fx["mixed_l3"] = [triangle(n), partisan(n, [0, 1, 2])]
    return fx


# -- independent oracles ----------------------------------------------------------


def relabel_oracle(c: ChoiceFunction, mapping) -> ChoiceFunction:
    """Relabel through the edge list, independent of core.permute."""
    return ChoiceFunction.from_edges(c.n, [(mapping[w], mapping[l]) for w, l in c.edges()])


def pseudo_balanced_oracle(c: ChoiceFunction) -> bool:
    """Transitive closure by Floyd-Warshall; an edge is on a cycle iff its head reaches its tail."""
    n = c.n
    reach = [[c.weight(i, j) == 1 for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return all(reach[y][x] for x, y in c.edges())


def tiered_functions_oracle(n: int) -> set[ChoiceFunction]:
    """Every function of the form 'x beats y iff rank(x) > rank(y)'."""
    out = set()
    for ranks in itertools.product(range(n), repeat=n):
        edges = [(x, y) for x in range(n) for y in range(n) if ranks[x] > ranks[y]]
        out.add(ChoiceFunction.from_edges(n, edges))
    return out


def partisan_oracle(c: ChoiceFunction):
    """Brute-force search for a winning set W with c == partisan(W)."""
    for r in range(1, c.n):
        for W in itertools.combinations(range(c.n), r):
            if partisan(c.n, W) == c:
                return frozenset(W)
    return None


# -- hypothesis strategies ------------------------------------------------------


@st.composite
def choice_functions(draw, min_n=3, max_n=6):
    n = draw(st.integers(min_n, max_n))
    table = draw(st.lists(st.sampled_from((-1, 0, 1)), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return ChoiceFunction(n, table)


@st.composite
def function_and_perms(draw, min_n=3, max_n=6):
    c = draw(choice_functions(min_n, max_n))
    s = Permutation(tuple(draw(st.permutations(range(c.n)))))
    t = Permutation(tuple(draw(st.permutations(range(c.n)))))
    return c, s, t


@pytest.fixture
def tri():
    return triangle(3)
