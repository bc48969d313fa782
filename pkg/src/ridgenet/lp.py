"""Exact rational linear programming (dense two-phase simplex).

Small problems only: the overlap test for a pair of (n-1)-simplex facets
needs 2n variables and n+1 equality rows with n <= ~64, so a dense tableau
with Bland's rule (which cannot cycle) is the simplest exact method.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    objective: Fraction | None
    x: tuple[Fraction, ...] | None


def solve_min(
    c: Sequence[Fraction],
    a_rows: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
) -> LPResult:
    """Minimize c.x subject to A x = b, x >= 0, exactly.

    Phase 1 minimizes the sum of artificial variables to find a basic
    feasible point; phase 2 minimizes the objective. Entering variable is
    the lowest-index negative reduced cost and ties in the ratio test break
    toward the lowest basis index (Bland's rule), so termination is
    guaranteed.
    """
    m = len(a_rows)
    nv = len(c)
    rows = [list(r) for r in a_rows]
    rhs = list(b)
    for i in range(m):
        if len(rows[i]) != nv:
            raise ValueError("constraint row length mismatch")
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    total = nv + m
    tableau = [
        rows[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [rhs[i]]
        for i in range(m)
    ]
    basis = list(range(nv, nv + m))

    def pivot(row: int, col: int) -> None:
        prow = tableau[row]
        inv = prow[col]
        tableau[row] = [x / inv for x in prow]
        prow = tableau[row]
        for r in range(m):
            if r != row:
                factor = tableau[r][col]
                if factor != 0:
                    tableau[r] = [x - factor * y for x, y in zip(tableau[r], prow)]
        basis[row] = col

    def run_phase(cost: list[Fraction], allowed: list[bool]) -> str:
        while True:
            cb = [cost[v] for v in basis]
            enter = -1
            for j in range(total):
                if not allowed[j] or j in basis:
                    continue
                reduced = cost[j] - sum(cb[i] * tableau[i][j] for i in range(m))
                if reduced < 0:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL
            leave = -1
            best: Fraction | None = None
            for i in range(m):
                coef = tableau[i][enter]
                if coef > 0:
                    ratio = tableau[i][total] / coef
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                return UNBOUNDED
            pivot(leave, enter)

    phase1_cost = [Fraction(0)] * nv + [Fraction(1)] * m
    allowed = [True] * total
    run_phase(phase1_cost, allowed)
    infeasibility = sum(
        phase1_cost[basis[i]] * tableau[i][total] for i in range(m)
    )
    if infeasibility > 0:
        return LPResult(INFEASIBLE, None, None)
    for i in range(m):
        if basis[i] >= nv:  # degenerate artificial still basic at zero
            for j in range(nv):
                if tableau[i][j] != 0:
                    pivot(i, j)
                    break
    for j in range(nv, total):
        allowed[j] = False
    phase2_cost = list(c) + [Fraction(0)] * m
    status = run_phase(phase2_cost, allowed)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, None)
    solution = [Fraction(0)] * nv
    for i, v in enumerate(basis):
        if v < nv:
            solution[v] = tableau[i][total]
    objective = sum(ci * xi for ci, xi in zip(c, solution))
    return LPResult(OPTIMAL, objective, tuple(solution))
