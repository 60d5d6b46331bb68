"""Feasibility over constant-sum transportation polytopes.

Given three finitely supported rational distributions and an integer
target, decide exactly whether a coupling (X, Y, Z) with those marginals
and X + Y + Z = target (surely) exists, and produce one when it does.

With the sum pinned, Z is determined by (X, Y), so the joint law is a
matrix q(x, y) with prescribed row sums, column sums, and anti-diagonal
sums: a three-line-sum transportation polytope.  Feasibility is decided by
the exact phase-1 simplex; the returned coupling is a basic feasible
solution, hence sparse (at most one atom per constraint row).

This module is the ground-truth oracle used to validate the constructive
couplers, and also the constructive engine behind the one-dimensional base
case (one exact solver, two entry points).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .simplexlp import solve_lp

Marginal = Mapping[int, Fraction]
TripleAtoms = Dict[Tuple[int, int, int], Fraction]


def _validated(marginal: Marginal) -> Dict[int, Fraction]:
    out = {}
    total = Fraction(0)
    for v, p in marginal.items():
        p = Fraction(p)
        if p < 0:
            raise ValueError("negative probability in marginal")
        if p > 0:
            out[int(v)] = p
            total += p
    if total != 1:
        raise ValueError(f"marginal does not sum to 1 (got {total})")
    return out


def transport_feasible(
    marginals: Sequence[Marginal], target_sum: int
) -> Optional[TripleAtoms]:
    """Exact coupling with the given marginals and constant sum, or None.

    ``marginals`` are three maps {integer value: probability}.  The result
    maps triples (x, y, z) with x + y + z == target_sum to positive
    rational probabilities; None means the polytope is empty.
    """
    if len(marginals) != 3:
        raise ValueError("exactly three marginals required")
    m1, m2, m3 = (_validated(m) for m in marginals)

    variables = []
    for x in sorted(m1):
        for y in sorted(m2):
            z = target_sum - x - y
            if z in m3:
                variables.append((x, y, z))
    if not variables:
        return None

    index = {v: i for i, v in enumerate(variables)}
    a_eq = []
    b_eq = []
    for x, px in sorted(m1.items()):
        row = [0] * len(variables)
        for (vx, vy, vz), i in index.items():
            if vx == x:
                row[i] = 1
        a_eq.append(row)
        b_eq.append(px)
    for y, py in sorted(m2.items()):
        row = [0] * len(variables)
        for (vx, vy, vz), i in index.items():
            if vy == y:
                row[i] = 1
        a_eq.append(row)
        b_eq.append(py)
    for z, pz in sorted(m3.items()):
        row = [0] * len(variables)
        for (vx, vy, vz), i in index.items():
            if vz == z:
                row[i] = 1
        a_eq.append(row)
        b_eq.append(pz)

    res = solve_lp(c=[0] * len(variables), a_eq=a_eq, b_eq=b_eq)
    if res.status != "optimal":
        return None
    return {
        variables[i]: val for i, val in enumerate(res.x) if val > 0
    }


def uniform_marginal(k: int) -> Dict[int, Fraction]:
    """Uniform distribution on {0, ..., k}."""
    p = Fraction(1, k + 1)
    return {v: p for v in range(k + 1)}
