"""Irwin-Hall density and CDF, exact and interval-certified.

``f_d`` denotes the density of the sum of ``d`` independent uniform [0,1]
variables: a piecewise polynomial of degree d-1 supported on [0, d],
symmetric about d/2, log-concave, equal to the normalized (d-1)-volume of
the slice {x in [0,1]^d : sum x_i = r}.

Two independent evaluation routes are implemented:

* the stable two-term recursion in (dimension, integer part)

      f_d(k+t) = ((k+t) f_{d-1}(k+t) + (d-k-t) f_{d-1}(k-1+t)) / (d-1)

  run either in exact rationals or in fixed-point integer interval
  arithmetic (outward rounding, sound enclosures);

* the alternating closed form, used for the CDF where exact rational
  arithmetic makes cancellation harmless:

      F_d(x) = (1/d!) * sum_k (-1)^k C(d,k) (x-k)_+^d.

All coefficients in the recursion are nonnegative, so the interval version
multiplies endpoints monotonically; per-cell outward rounding at ``bits``
fractional bits gives a final absolute error O(d^2 * 2**-bits), far below
anything the verification needs at the default 128 bits.

Boundary convention: f_1 is taken to be 1 on the closed interval [0, 1] so
that f_d(x) = f_d(d-x) holds for every rational x at every d.  For d >= 2
the density is continuous and the convention is invisible.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, floor

from .errors import PrecisionInsufficient
from .intervals import DEFAULT_BITS, Interval

#: Hard cap for precision doubling inside root certification.
MAX_BITS = 4096


# ---------------------------------------------------------------------------
# exact evaluation
# ---------------------------------------------------------------------------

def ih_pdf(d: int, x) -> Fraction:
    """Exact density value f_d(x) at a rational point."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    x = Fraction(x)
    if d == 1:
        return Fraction(1) if 0 <= x <= 1 else Fraction(0)
    if x <= 0 or x >= d:
        return Fraction(0)
    k = floor(x)
    t = x - k
    row = [Fraction(1)]
    for j in range(2, d + 1):
        prev = row
        row = []
        den = j - 1
        for kk in range(j):
            acc = Fraction(0)
            if kk < j - 1:
                acc += (kk + t) * prev[kk]
            if kk >= 1:
                acc += (j - kk - t) * prev[kk - 1]
            row.append(acc / den)
    return row[k]


def ih_cdf(d: int, x) -> Fraction:
    """Exact CDF F_d(x) via the alternating closed form."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    x = Fraction(x)
    if x <= 0:
        return Fraction(0)
    if x >= d:
        return Fraction(1)
    total = Fraction(0)
    for k in range(floor(x) + 1):
        term = comb(d, k) * (x - k) ** d
        total += -term if k % 2 else term
    fact = 1
    for i in range(2, d + 1):
        fact *= i
    return total / fact


def slice_volume(d: int, u) -> Fraction:
    """Volume of {x in [0,1]^d : u <= sum x_i < 2u}, i.e. F_d(min(2u,d)) - F_d(u)."""
    u = Fraction(u)
    if not 0 <= u <= d:
        raise ValueError(f"u={u} outside [0, {d}]")
    return ih_cdf(d, min(2 * u, Fraction(d))) - ih_cdf(d, u)


# ---------------------------------------------------------------------------
# fixed-point interval evaluation
# ---------------------------------------------------------------------------

def _row_enclosure_scaled(d: int, t_lo: int, t_hi: int, bits: int):
    """Enclosure of f_d(k+t), k = 0..d-1, over t in [t_lo, t_hi] / 2**bits.

    Values are returned as two lists of scaled integers (lo, hi); every
    arithmetic step rounds outward, and all recursion coefficients are
    nonnegative, so [lo[k], hi[k]] / 2**bits encloses the true range.
    """
    one = 1 << bits
    lo = [one]
    hi = [one]
    for j in range(2, d + 1):
        den = (j - 1) << bits
        nlo = []
        nhi = []
        jb = j << bits
        for kk in range(j):
            kb = kk << bits
            acc_lo = 0
            acc_hi = 0
            if kk < j - 1:
                acc_lo += (kb + t_lo) * lo[kk]
                acc_hi += (kb + t_hi) * hi[kk]
            if kk >= 1:
                acc_lo += (jb - kb - t_hi) * lo[kk - 1]
                acc_hi += (jb - kb - t_lo) * hi[kk - 1]
            nlo.append(acc_lo // den)
            nhi.append(-((-acc_hi) // den))
        lo = nlo
        hi = nhi
    return lo, hi


def ih_pdf_interval(d: int, x: Interval, bits: int = DEFAULT_BITS) -> Interval:
    """Sound enclosure of {f_d(t) : t in x}.

    The input interval is clamped to the support and split at integer
    breakpoints; each piece runs the fixed-point recursion with its own
    fractional-part interval, and the hull of the pieces is returned.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if d == 1:
        if x.hi < 0 or x.lo > 1:
            return Interval.point(0)
        if x.lo >= 0 and x.hi <= 1:
            return Interval.point(1)
        return Interval(Fraction(0), Fraction(1))
    if x.hi <= 0 or x.lo >= d:
        return Interval.point(0)
    y_lo = max(x.lo, Fraction(0))
    y_hi = min(x.hi, Fraction(d))
    one = 1 << bits
    pieces = []
    k = floor(y_lo)
    while k < d and Fraction(k) <= y_hi:
        seg_lo = max(y_lo, Fraction(k))
        seg_hi = min(y_hi, Fraction(k + 1))
        if seg_lo <= seg_hi and not (seg_hi == k and k > floor(y_lo)):
            f_lo = seg_lo - k
            f_hi = seg_hi - k
            t_lo = (f_lo.numerator << bits) // f_lo.denominator
            t_hi = -((-f_hi.numerator << bits) // f_hi.denominator)
            t_lo = max(0, min(t_lo, one))
            t_hi = max(0, min(t_hi, one))
            row_lo, row_hi = _row_enclosure_scaled(d, t_lo, t_hi, bits)
            pieces.append((row_lo[k], row_hi[k]))
        k += 1
    lo = max(0, min(p[0] for p in pieces))
    hi = max(p[1] for p in pieces)
    return Interval(Fraction(lo, one), Fraction(hi, one))


def _pdf_point_enclosure(d: int, x: Fraction, bits: int) -> Interval:
    return ih_pdf_interval(d, Interval.point(x), bits)


# ---------------------------------------------------------------------------
# floating-point seed (non-rigorous; used only to propose brackets that are
# then certified with interval arithmetic)
# ---------------------------------------------------------------------------

def _pdf_float(d: int, x: float) -> float:
    if d == 1:
        return 1.0 if 0.0 <= x <= 1.0 else 0.0
    if x <= 0.0 or x >= d:
        return 0.0
    k = int(x)
    t = x - k
    row = [1.0]
    for j in range(2, d + 1):
        prev = row
        inv = 1.0 / (j - 1)
        row = []
        append = row.append
        for kk in range(j):
            v = 0.0
            if kk < j - 1:
                v += (kk + t) * prev[kk]
            if kk >= 1:
                v += (j - kk - t) * prev[kk - 1]
            append(v * inv)
    return row[k]


def _g_float(d: int, u: float) -> float:
    return _pdf_float(d, u) - 2.0 * _pdf_float(d, 2.0 * u)


def _float_root_seed(d: int) -> float:
    """Approximate root of f_d(u) = 2 f_d(2u) in (d/4, d/2) by safeguarded secant."""
    a, b = d / 4.0, d / 2.0
    fa, fb = _g_float(d, a), _g_float(d, b)
    u0 = min(max(d / 3.0 + 0.107508, a + 1e-9), b - 1e-9)
    u1 = min(u0 + 1e-3, b - 1e-9)
    f0, f1 = _g_float(d, u0), _g_float(d, u1)
    for _ in range(80):
        if f1 == f0:
            u2 = 0.5 * (a + b)
        else:
            u2 = u1 - f1 * (u1 - u0) / (f1 - f0)
            if not (a < u2 < b):
                u2 = 0.5 * (a + b)
        f2 = _g_float(d, u2)
        if f2 < 0:
            a, fa = u2, f2
        else:
            b, fb = u2, f2
        u0, f0, u1, f1 = u1, f1, u2, f2
        if abs(u1 - u0) < 1e-13 * max(1.0, abs(u1)):
            break
    return u1


# ---------------------------------------------------------------------------
# certified root and optimum
# ---------------------------------------------------------------------------

def _g_enclosure(d: int, u: Fraction, bits: int) -> Interval:
    return _pdf_point_enclosure(d, u, bits) - 2 * _pdf_point_enclosure(d, 2 * u, bits)


def find_ustar(d: int, eps, bits: int = DEFAULT_BITS) -> Interval:
    """Certified enclosure of the slice-volume maximizer u_d*.

    The maximizer is the unique root of g(u) = f_d(u) - 2 f_d(2u) in
    (d/4, d/2).  A floating-point secant pass proposes a bracket of width
    ``eps``; the bracket is accepted only when interval evaluation certifies
    g < 0 at the left endpoint and g > 0 at the right one.  If certification
    fails the routine falls back to certified bisection from [d/4, d/2],
    doubling the working precision (up to a cap) whenever a midpoint sign
    cannot be resolved.

    For d = 1 the generic argument does not apply; direct analysis of
    u -> min(2u,1) - u gives the degenerate enclosure [1/2, 1/2].
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if d == 1:
        return Interval.point(Fraction(1, 2))

    lo_dom = Fraction(d, 4)
    hi_dom = Fraction(d, 2)

    seed = _float_root_seed(d)
    half = eps / 2
    a = Fraction(seed) - half
    b = a + eps
    if lo_dom < a and b < hi_dom:
        if _g_enclosure(d, a, bits).strictly_below(0) and _g_enclosure(
            d, b, bits
        ).strictly_above(0):
            return Interval(a, b)

    # fallback: certified bisection
    lo, hi = lo_dom, hi_dom
    cur_bits = bits
    while not _g_enclosure(d, lo, cur_bits).strictly_below(0):
        cur_bits *= 2
        if cur_bits > MAX_BITS:
            raise PrecisionInsufficient(f"cannot certify g({lo}) < 0 for d={d}")
    # g(d/2) = f_d(d/2) > 0 exactly since f_d(d) = 0
    while not _g_enclosure(d, hi, cur_bits).strictly_above(0):
        cur_bits *= 2
        if cur_bits > MAX_BITS:
            raise PrecisionInsufficient(f"cannot certify g({hi}) > 0 for d={d}")
    while hi - lo > eps:
        mid = (lo + hi) / 2
        gm = _g_enclosure(d, mid, cur_bits)
        if gm.strictly_below(0):
            lo = mid
        elif gm.strictly_above(0):
            hi = mid
        else:
            cur_bits *= 2
            if cur_bits > MAX_BITS:
                raise PrecisionInsufficient(
                    f"sign of g at {mid} unresolved at {MAX_BITS} bits (d={d})"
                )
    return Interval(lo, hi)


def ustar_enclosure(d: int, eps, bits: int = DEFAULT_BITS) -> Interval:
    """u_d* enclosure, exact for the two small dimensions with closed forms.

    d=1: the maximizer of min(2u,1) - u is u = 1/2.
    d=2: on the triangle density, u = 2(2 - 2u) gives u = 4/5 exactly.
    """
    if d == 1:
        return Interval.point(Fraction(1, 2))
    if d == 2:
        return Interval.point(Fraction(4, 5))
    return find_ustar(d, eps, bits)


def slice_volume_interval(d: int, u: Interval) -> Interval:
    """Enclosure of Vol(S_d(u')) over u' in the given interval (exact CDF calls)."""
    top = Fraction(d)
    lo = ih_cdf(d, min(2 * u.lo, top)) - ih_cdf(d, u.hi)
    hi = ih_cdf(d, min(2 * u.hi, top)) - ih_cdf(d, u.lo)
    return Interval(max(lo, Fraction(0)), max(hi, Fraction(0), lo))


def cdstar(d: int, eps, bits: int = DEFAULT_BITS) -> Interval:
    """Certified enclosure of the maximal slice volume c_d* = Vol(S_d(u_d*)).

    Evaluates the exact rational CDF over a u_d* enclosure; since the volume
    is stationary at the optimum, the enclosure width shrinks quadratically
    in the u-enclosure width, so a few refinement rounds always suffice.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    eps = Fraction(eps)
    eps_u = eps
    for _ in range(6):
        u = ustar_enclosure(d, eps_u, bits)
        vol = slice_volume_interval(d, u)
        if vol.width <= eps:
            return vol
        eps_u /= 16
    raise PrecisionInsufficient(f"cdstar enclosure did not reach width {eps} (d={d})")
