"""Exact rational linear algebra and a small dense simplex solver.

Everything works on :class:`fractions.Fraction` (or plain ``int``) values; no
floating point is involved anywhere, so every returned assignment satisfies its
constraints exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Mapping, Sequence

Rational = Fraction


def solve_square_system(A: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Solve ``A x = b`` exactly.  Returns ``None`` when ``A`` is singular."""
    n = len(A)
    if len(b) != n or any(len(row) != n for row in A):
        raise ValueError("A must be square and match b")
    M = [[Fraction(v) for v in row] + [Fraction(b[i])] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return tuple(M[i][n] for i in range(n))


def _solve_unique(columns: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Unique solution of a tall system with the given columns, if one exists.

    Returns ``None`` when the columns are dependent or the system is inconsistent.
    """
    k = len(columns)
    m = len(rhs)
    M = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(rhs[i])] for i in range(m)]
    row = 0
    for col in range(k):
        piv = next((r for r in range(row, m) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[row], M[piv] = M[piv], M[row]
        p = M[row][col]
        M[row] = [v / p for v in M[row]]
        for r in range(m):
            if r != row and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[row])]
        row += 1
    if any(M[r][k] != 0 for r in range(row, m)):
        return None
    return tuple(M[i][k] for i in range(k))


# -- linear programming -------------------------------------------------------


@dataclass(frozen=True)
class LinearProgram:
    """``maximize objective·x  s.t.  rows·x = rhs,  x ≥ 0``."""

    num_vars: int
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    objective: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.rhs):
            raise ValueError("one right-hand side per row")
        if any(len(r) != self.num_vars for r in self.rows):
            raise ValueError("row width does not match variable count")
        if len(self.objective) != self.num_vars:
            raise ValueError("objective width does not match variable count")

    @classmethod
    def build(cls, num_vars: int, rows, rhs, objective) -> "LinearProgram":
        return cls(
            num_vars,
            tuple(tuple(Fraction(v) for v in r) for r in rows),
            tuple(Fraction(v) for v in rhs),
            tuple(Fraction(v) for v in objective),
        )

    def is_feasible_point(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.num_vars or any(v < 0 for v in x):
            return False
        return all(sum(a * v for a, v in zip(r, x)) == b for r, b in zip(self.rows, self.rhs))


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    assignment: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


@dataclass
class _Tableau:
    rows: list[list[Fraction]]
    rhs: list[Fraction]
    basis: list[int]
    z: list[Fraction] = field(default_factory=list)  # reduced costs
    z0: Fraction = Fraction(0)  # current objective value

    def price(self, cost: Sequence[Fraction]) -> None:
        width = len(cost)
        z = list(cost)
        z0 = Fraction(0)
        for i, bv in enumerate(self.basis):
            cb = cost[bv]
            if cb:
                row = self.rows[i]
                for j in range(width):
                    if row[j]:
                        z[j] -= cb * row[j]
                z0 += cb * self.rhs[i]
        self.z, self.z0 = z, z0

    def pivot(self, r: int, col: int) -> None:
        p = self.rows[r][col]
        prow = [v / p for v in self.rows[r]]
        prhs = self.rhs[r] / p
        self.rows[r], self.rhs[r] = prow, prhs
        nz = [j for j, v in enumerate(prow) if v]
        for i, row in enumerate(self.rows):
            if i != r and row[col]:
                f = row[col]
                for j in nz:
                    row[j] -= f * prow[j]
                self.rhs[i] -= f * prhs
        if self.z[col]:
            f = self.z[col]
            for j in nz:
                self.z[j] -= f * prow[j]
            self.z0 += f * prhs
        self.basis[r] = col

    def run(self, allowed: int) -> str:
        """Maximize with Bland's rule over the first ``allowed`` columns."""
        while True:
            col = next((j for j in range(allowed) if self.z[j] > 0), None)
            if col is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    ratio = self.rhs[i] / a
                    cand = (ratio, self.basis[i], i)
                    if best is None or cand[:2] < best[:2]:
                        best = cand
            if best is None:
                return "unbounded"
            self.pivot(best[2], col)


def lp_maximize(lp: LinearProgram) -> LPResult:
    """Exact two-phase simplex with Bland's anti-cycling rule."""
    n = lp.num_vars
    m = len(lp.rows)
    rows, rhs = [], []
    for r, b in zip(lp.rows, lp.rhs):
        if b < 0:
            r, b = [-v for v in r], -b
        rows.append([Fraction(v) for v in r] + [Fraction(0)] * m)
        rhs.append(Fraction(b))
    for i in range(m):
        rows[i][n + i] = Fraction(1)
    tab = _Tableau(rows, rhs, [n + i for i in range(m)])

    # phase 1: maximize minus the sum of artificials
    tab.price([Fraction(0)] * n + [Fraction(-1)] * m)
    tab.run(n + m)
    if tab.z0 < 0:
        return LPResult("infeasible")

    # drive zero-level artificials out of the basis; drop redundant rows
    keep = []
    for i in range(m):
        if tab.basis[i] >= n:
            col = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if col is None:
                continue
            tab.pivot(i, col)
        keep.append(i)
    tab.rows = [tab.rows[i][:n] for i in keep]
    tab.rhs = [tab.rhs[i] for i in keep]
    tab.basis = [tab.basis[i] for i in keep]

    tab.price(list(lp.objective))
    status = tab.run(n)
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i, bv in enumerate(tab.basis):
        x[bv] = tab.rhs[i]
    return LPResult("optimal", tab.z0, tuple(x))


def lp_minimize(lp: LinearProgram) -> LPResult:
    neg = LinearProgram(lp.num_vars, lp.rows, lp.rhs, tuple(-v for v in lp.objective))
    res = lp_maximize(neg)
    if res.optimal:
        return LPResult("optimal", -res.value, res.assignment)
    return res


# -- convex combinations hitting the origin -----------------------------------


@dataclass(frozen=True)
class BasicSolution:
    support: tuple[int, ...]  # indices into the input point list
    coefficients: tuple[Fraction, ...]
    value: Fraction  # functional evaluated at the solution


def convex_zero_search(
    points: Sequence[tuple[Sequence, Hashable]],
    functional: Mapping[Hashable, Fraction | int],
) -> BasicSolution | None:
    """Find a convex combination of ``points`` equal to ``(0, 0)`` with a nonzero
    value of ``functional`` (summed over the tags of the combined points).

    ``points`` is a sequence of ``((a, b), tag)``.  The feasible coefficients form
    a polytope cut out by three equalities, so a linear functional that is not
    identically zero on it is nonzero at some vertex, and every vertex has a
    support of at most three affinely independent points.  Supports are tried by
    size, then in ``itertools.combinations`` order, and the first strictly
    positive solution with a nonzero value is returned.
    """
    cols = [(1, p[0], p[1]) for p, _ in points]
    vals = [Fraction(functional.get(tag, 0)) for _, tag in points]
    rhs = (1, 0, 0)
    for size in (1, 2, 3):
        for support in itertools.combinations(range(len(points)), size):
            sol = _solve_unique([cols[i] for i in support], rhs)
            if sol is None or any(v <= 0 for v in sol):
                continue
            value = sum((v * vals[i] for v, i in zip(sol, support)), Fraction(0))
            if value != 0:
                return BasicSolution(support, sol, value)
    return None
