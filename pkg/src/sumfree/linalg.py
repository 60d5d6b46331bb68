"""Exact null spaces via fraction-free elimination.

Bareiss one-step elimination keeps every intermediate entry an integer
(each is a minor of the input, up to sign), so there is no rational-gcd
overhead and no rounding anywhere.  Rows may be given as Fractions; each
row is scaled to integers first, which leaves the null space unchanged.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence, Union

Num = Union[Fraction, int]


def exact_null_space(rows: Sequence[Sequence[Num]]) -> List[List[Fraction]]:
    """Basis of the right null space {v : A v = 0}, as Fraction vectors."""
    nrows = len(rows)
    if nrows == 0:
        raise ValueError("empty matrix")
    ncols = len(rows[0])

    a: List[List[int]] = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        mult = lcm(*(f.denominator for f in fr)) if fr else 1
        a.append([int(f * mult) for f in fr])

    piv_cols: List[int] = []
    prev = 1
    r = 0
    for col in range(ncols):
        sel = next((i for i in range(r, nrows) if a[i][col]), None)
        if sel is None:
            continue
        if sel != r:
            a[r], a[sel] = a[sel], a[r]
        piv = a[r][col]
        for i in range(r + 1, nrows):
            f = a[i][col]
            if f or prev != 1:
                ai = a[i]
                ar = a[r]
                for j in range(ncols):
                    ai[j] = (ai[j] * piv - f * ar[j]) // prev
        prev = piv
        piv_cols.append(col)
        r += 1
        if r == nrows:
            break

    free_cols = [c for c in range(ncols) if c not in set(piv_cols)]
    basis: List[List[Fraction]] = []
    for free in free_cols:
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i in range(len(piv_cols) - 1, -1, -1):
            col = piv_cols[i]
            acc = Fraction(0)
            for j in range(col + 1, ncols):
                if a[i][j] and v[j]:
                    acc += a[i][j] * v[j]
            v[col] = -acc / a[i][col]
        basis.append(v)
    return basis
