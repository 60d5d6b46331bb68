"""Lattice layer combinatorics on the cube {0..n}^d.

A *layer* L_d(r) is the set of points of {0..n}^d with coordinate sum
exactly r; its cardinality N_d(r) satisfies the first-coordinate recurrence

    N_d(r) = sum_{i=0}^{n} N_{d-1}(r - i),        N_1(r) = 1 on 0..n,

which is evaluated with big integers and memoized per (d, n).  The law of
the first coordinate of a uniform point of L_d(r) is

    q_{d,r}(u) = N_{d-1}(r-u) / N_d(r),

an exact rational distribution (q_{d,r} is set to 0 outside the valid
index ranges, with N_0(x) = [x == 0]).

The module also hosts the slice-related integer machinery: the threshold
m = floor(u_d* n) extracted rigorously from a u_d* enclosure, membership in
the optimal sum-free slice S* = {x : u_d* n <= sum x < 2 u_d* n}, and the
five-band partition of {0..n}^(d-1) by coordinate sum used by the weight
certificates:

    A = [0, m-n),  B = [m-n, m],  C = (m, 2m-n),  D = [2m-n, 2m],
    E = (2m, (d-1)n],   with C split at (d-1)n/2 into C1 / C2.

For d >= 3 (where m > n for every n) these intervals are pairwise disjoint;
for d = 2 the B and D windows overlap, and ``band_of`` resolves membership
by first match in the order A, B, C, D, E so that the bands always
partition the cube.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Dict, Iterator, List, Tuple

from .errors import CapExceeded, EmptyLayer, PrecisionInsufficient
from .intervals import Interval
from .irwin_hall import ustar_enclosure

Point = Tuple[int, ...]

#: Bands are identified by these literal labels; C = C1 | C2.
BAND_LABELS = ("A", "B", "C1", "C2", "D", "E")

_DEFAULT_ENUM_CAP = 2_000_000
_TABLE_CACHE_MAX = 256
_table_cache: Dict[Tuple[int, int], List[List[int]]] = {}


def _tables(d: int, n: int) -> List[List[int]]:
    """Rows [N_1, ..., N_d] for side parameter n, cached per (d, n)."""
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    for (dc, nc), rows in _table_cache.items():
        if nc == n and dc >= d:
            return rows[:d]
    row = [1] * (n + 1)
    rows = [row]
    for _ in range(2, d + 1):
        prev = rows[-1]
        size = len(prev) + n
        # prefix sums make each row O(size)
        prefix = [0]
        for v in prev:
            prefix.append(prefix[-1] + v)
        cur = []
        for r in range(size):
            a = max(0, r - n)
            b = min(r, len(prev) - 1)
            cur.append(prefix[b + 1] - prefix[a] if a <= b else 0)
        rows.append(cur)
    if len(_table_cache) >= _TABLE_CACHE_MAX:
        _table_cache.pop(next(iter(_table_cache)))
    _table_cache[(d, n)] = rows
    return rows


def layer_count(d: int, n: int, r: int) -> int:
    """|L_d(r)| as a big integer; 0 outside 0 <= r <= d*n."""
    if d == 0:
        return 1 if r == 0 else 0
    if r < 0 or r > d * n:
        return 0
    return _tables(d, n)[d - 1][r]


def layer_counts_row(d: int, n: int) -> List[int]:
    """All counts N_d(0..d*n) in one list."""
    return list(_tables(d, n)[d - 1])


def first_coord_law(d: int, n: int, r: int) -> Dict[int, Fraction]:
    """q_{d,r}: exact law of the first coordinate of a uniform layer point."""
    if r < 0 or r > d * n:
        raise EmptyLayer(f"layer (d={d}, n={n}, r={r}) is empty")
    total = layer_count(d, n, r)
    law = {}
    for u in range(n + 1):
        c = layer_count(d - 1, n, r - u)
        if c:
            law[u] = Fraction(c, total)
    return law


def q_value(d: int, n: int, r: int, u: int) -> Fraction:
    """q_{d,r}(u) with the zero-outside-range convention."""
    if not (0 <= r <= d * n and 0 <= u <= n):
        return Fraction(0)
    c = layer_count(d - 1, n, r - u)
    if not c:
        return Fraction(0)
    return Fraction(c, layer_count(d, n, r))


def enumerate_layer(
    d: int, n: int, r: int, cap: int = _DEFAULT_ENUM_CAP
) -> Iterator[Point]:
    """Lexicographic stream of the points of L_d(r).

    Raises CapExceeded up front when the layer is larger than ``cap``.
    """
    if layer_count(d, n, r) > cap:
        raise CapExceeded(f"layer size {layer_count(d, n, r)} exceeds cap {cap}")

    def rec(dim: int, rem: int, prefix: Point) -> Iterator[Point]:
        if dim == 1:
            if 0 <= rem <= n:
                yield prefix + (rem,)
            return
        lo = max(0, rem - (dim - 1) * n)
        hi = min(n, rem)
        for i in range(lo, hi + 1):
            yield from rec(dim - 1, rem - i, prefix + (i,))

    return rec(d, r, ())


# ---------------------------------------------------------------------------
# slice threshold and S* membership
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SliceThreshold:
    """m = floor(u_d* n) together with the enclosure that certified it."""

    d: int
    n: int
    m: int
    ustar: Interval


_THRESHOLD_EPS0 = Fraction(1, 10**7)
_THRESHOLD_EPS_FLOOR = Fraction(1, 10**30)


def slice_threshold(d: int, n: int) -> SliceThreshold:
    """Certified m = floor(u_d* n).

    The u_d* enclosure is refined until n*lo and n*hi share their floor.
    For d <= 2 the threshold is exact (u_1* = 1/2, u_2* = 4/5).  If the
    enclosure still straddles an integer at width 1e-30 the call fails
    loudly rather than guessing.
    """
    eps = _THRESHOLD_EPS0
    while True:
        enc = ustar_enclosure(d, eps)
        lo_m = floor(enc.lo * n)
        hi_m = floor(enc.hi * n)
        if lo_m == hi_m:
            return SliceThreshold(d, n, lo_m, enc)
        if enc.is_point():
            # exact rational u*: floor(hi*n) differs only at an exact integer
            return SliceThreshold(d, n, lo_m if enc.lo * n != lo_m + 1 else hi_m, enc)
        eps /= 10**4
        if eps < _THRESHOLD_EPS_FLOOR:
            raise PrecisionInsufficient(
                f"u_{d}* * {n} straddles an integer below width {_THRESHOLD_EPS_FLOOR}"
            )


def sstar_membership(x: Point, d: int, n: int) -> bool:
    """Rigorous membership of x in S* = {u_d* n <= sum x_i < 2 u_d* n}."""
    return _sum_in_sstar(sum(x), d, n)


def sstar_sum_range(d: int, n: int) -> Tuple[int, int]:
    """Integers (s_lo, s_hi) with S* = {x : s_lo <= sum x <= s_hi}."""
    lo = hi = None
    for s in range(0, d * n + 1):
        if _sum_in_sstar(s, d, n):
            if lo is None:
                lo = s
            hi = s
    if lo is None:
        raise EmptyLayer(f"S* is empty for d={d}, n={n}")
    return lo, hi


def _sum_in_sstar(s: int, d: int, n: int) -> bool:
    eps = _THRESHOLD_EPS0
    while True:
        enc = ustar_enclosure(d, eps)
        lo1, hi1 = enc.lo * n, enc.hi * n
        if s < lo1 or s >= 2 * hi1:
            return False
        if s >= hi1 and s < 2 * lo1:
            return True
        if enc.is_point():
            return lo1 <= s < 2 * lo1
        eps /= 10**4
        if eps < _THRESHOLD_EPS_FLOOR:
            raise PrecisionInsufficient(f"sum {s} on slice boundary (d={d}, n={n})")


def sstar_size(d: int, n: int) -> int:
    """|S*| by summing layer counts over the certified sum range."""
    s_lo, s_hi = sstar_sum_range(d, n)
    return sum(layer_count(d, n, s) for s in range(s_lo, s_hi + 1))


def sstar_points(d: int, n: int, cap: int = _DEFAULT_ENUM_CAP) -> List[Point]:
    """Explicit sorted point list of S* (desk scale)."""
    s_lo, s_hi = sstar_sum_range(d, n)
    pts: List[Point] = []
    for s in range(s_lo, s_hi + 1):
        pts.extend(enumerate_layer(d, n, s, cap=cap))
        if len(pts) > cap:
            raise CapExceeded(f"S* enumeration exceeds cap {cap}")
    return sorted(pts)


# ---------------------------------------------------------------------------
# bands
# ---------------------------------------------------------------------------

def band_of(x: Point, m: int, d: int, n: int) -> str:
    """Band label of a point of {0..n}^(d-1), by coordinate sum.

    Membership windows are checked in the order A, B, C, D, E; for d >= 3
    they are disjoint and the order is irrelevant, while for d = 2 (where
    m <= n makes B and D overlap) the first match keeps the labels a
    partition.  C is split at (d-1)n/2 into C1 (at or below) and C2.
    """
    s = sum(x) if isinstance(x, tuple) else int(x)
    e = d - 1
    if 0 <= s < m - n:
        return "A"
    if m - n <= s <= m:
        return "B"
    if m < s < 2 * m - n:
        return "C1" if 2 * s <= e * n else "C2"
    if 2 * m - n <= s <= 2 * m:
        return "D"
    if 2 * m < s <= e * n:
        return "E"
    raise ValueError(f"sum {s} outside [0, {e * n}]")


def band_sum_sets(m: int, d: int, n: int) -> Dict[str, List[int]]:
    """Raw membership windows per band as explicit sum lists (may overlap at d=2).

    These are the literal half-open/closed windows defining the blocks of
    the triple set Omega; see ``band_of`` for the partition view.
    """
    e = d - 1
    top = e * n
    out: Dict[str, List[int]] = {lab: [] for lab in BAND_LABELS}
    for s in range(0, top + 1):
        if 0 <= s < m - n:
            out["A"].append(s)
        if m - n <= s <= m:
            out["B"].append(s)
        if m < s < 2 * m - n:
            (out["C1"] if 2 * s <= e * n else out["C2"]).append(s)
        if 2 * m - n <= s <= 2 * m:
            out["D"].append(s)
        if 2 * m < s:
            out["E"].append(s)
    return out
