"""Exact rational linear programming via fraction-free simplex.

Two-phase primal simplex over exact arithmetic.  The tableau is a matrix
of Python integers with a single positive denominator (the previous
pivot); pivots use the Sylvester-identity update

    T'[i][j] = (T[i][j] * T[p][c] - T[i][c] * T[p][j]) / den,

whose divisions are exact (integer pivoting, Edmonds).  This avoids
per-entry gcd work and is the workhorse behind the coupling constructors,
the transportation-feasibility oracle, and the fiber linear programs.

Bland's rule (smallest eligible entering index; ratio ties broken by the
smallest basic variable index) rules out cycling, so termination is
unconditional.

Conventions: maximize c.x subject to A_ub x <= b_ub, A_eq x = b_eq, x >= 0,
with all b_ub >= 0.  Inputs may be Fractions; each row is scaled to
integers internally, which amounts to measuring its slack or artificial
variable in units of the row multiplier, and the scaling is undone on
output.  Dual multipliers for the inequality rows are read off the final
objective row (slack reduced costs) on request; for a maximization they
are nonnegative and satisfy exact strong duality at the optimum, which
the certificate module uses to emit dual certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Union

Num = Union[Fraction, int]


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    objective: Optional[Fraction] = None
    x: Optional[List[Fraction]] = None
    duals_ub: Optional[List[Fraction]] = None


def _scaled_ints(values: Sequence[Num]) -> tuple[List[int], int]:
    fracs = [Fraction(v) for v in values]
    mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return [int(f * mult) for f in fracs], mult


def solve_lp(
    c: Sequence[Num],
    a_ub: Sequence[Sequence[Num]] = (),
    b_ub: Sequence[Num] = (),
    a_eq: Sequence[Sequence[Num]] = (),
    b_eq: Sequence[Num] = (),
    want_duals: bool = False,
) -> LPResult:
    """Maximize c.x subject to A_ub x <= b_ub, A_eq x = b_eq, x >= 0."""
    nvar = len(c)
    n_ub = len(a_ub)
    n_eq = len(a_eq)
    m = n_ub + n_eq

    c_ints, c_scale = _scaled_ints(c)

    ncol = nvar + n_ub + n_eq  # structural | slack | artificial
    rhs = ncol

    rows: List[List[int]] = []
    row_mult: List[int] = []
    basis: List[int] = []

    for i in range(n_ub):
        ints, mult = _scaled_ints(list(a_ub[i]) + [b_ub[i]])
        if ints[-1] < 0:
            raise ValueError("inequality rows must have nonnegative rhs")
        full = [0] * (ncol + 1)
        full[:nvar] = ints[:nvar]
        full[nvar + i] = 1  # slack measured in row units
        full[rhs] = ints[-1]
        rows.append(full)
        row_mult.append(mult)
        basis.append(nvar + i)

    for i in range(n_eq):
        ints, mult = _scaled_ints(list(a_eq[i]) + [b_eq[i]])
        if ints[-1] < 0:
            ints = [-v for v in ints]
        full = [0] * (ncol + 1)
        full[:nvar] = ints[:nvar]
        full[nvar + n_ub + i] = 1  # artificial in row units
        full[rhs] = ints[-1]
        rows.append(full)
        row_mult.append(mult)
        basis.append(nvar + n_ub + i)

    den = 1

    # phase-2 objective row: entries z_j - c_j (scaled); rhs = objective value
    r2 = [0] * (ncol + 1)
    for j in range(nvar):
        r2[j] = -c_ints[j]
    # phase-1 objective row for (maximize -sum artificials), priced out
    r1 = [0] * (ncol + 1)
    for i in range(n_ub, m):
        row = rows[i]
        for j in range(ncol + 1):
            r1[j] -= row[j]
    for j in range(nvar + n_ub, ncol):
        r1[j] = 0

    def pivot(pr: int, pc: int) -> None:
        nonlocal den
        prow = rows[pr]
        piv = prow[pc]
        targets = rows + [r1, r2]
        for idx, row in enumerate(targets):
            if row is prow:
                continue
            f = row[pc]
            if f:
                for j in range(ncol + 1):
                    row[j] = (row[j] * piv - f * prow[j]) // den
            elif piv != den:
                for j in range(ncol + 1):
                    row[j] = (row[j] * piv) // den
        den = piv
        basis[pr] = pc

    def ratio_leave(pc: int) -> Optional[int]:
        best = None
        for i in range(m):
            a = rows[i][pc]
            if a > 0:
                if best is None:
                    best = i
                else:
                    lhs = rows[i][rhs] * rows[best][pc]
                    cmp = rows[best][rhs] * rows[i][pc]
                    if lhs < cmp or (lhs == cmp and basis[i] < basis[best]):
                        best = i
        return best

    def run_phase(obj: List[int], banned_from: int) -> str:
        while True:
            pc = -1
            for j in range(banned_from if banned_from else ncol):
                if obj[j] < 0:
                    pc = j
                    break
            if pc < 0:
                return "optimal"
            pr = ratio_leave(pc)
            if pr is None:
                return "unbounded"
            pivot(pr, pc)

    if n_eq:
        status = run_phase(r1, 0)  # artificials may move freely in phase 1
        if status != "optimal" or r1[rhs] != 0:
            return LPResult(status="infeasible")
        for i in range(m):  # pivot out artificials basic at value zero
            if basis[i] >= nvar + n_ub:
                prow = rows[i]
                pc = next((j for j in range(nvar + n_ub) if prow[j] != 0), None)
                if pc is None:
                    continue  # redundant constraint; row is inert
                if prow[pc] < 0:
                    rows[i] = [-v for v in prow]
                pivot(i, pc)

    status = run_phase(r2, nvar + n_ub)  # artificials banned in phase 2
    if status == "unbounded":
        return LPResult(status="unbounded")

    x = [Fraction(0)] * nvar
    for i in range(m):
        if basis[i] < nvar:
            x[basis[i]] = Fraction(rows[i][rhs], den)
    objective = Fraction(r2[rhs], den) / c_scale

    duals = None
    if want_duals:
        duals = [
            Fraction(r2[nvar + i], den) * row_mult[i] / c_scale for i in range(n_ub)
        ]
    return LPResult(status="optimal", objective=objective, x=x, duals_ub=duals)
