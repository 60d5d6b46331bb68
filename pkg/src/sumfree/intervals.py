"""Interval arithmetic with exact rational endpoints.

Every operation returns an *enclosure*: the result interval contains every
pointwise result over the operand intervals.  Endpoints are exact
``fractions.Fraction`` values, so soundness never depends on hardware
rounding modes.  To keep rational sizes from blowing up inside long
computations, ``round_out`` rounds endpoints outward onto the dyadic grid
``k / 2**bits``; the default working precision is 128 fractional bits.

The transcendental enclosures (``exp_interval``, ``log_interval``,
``sqrt_interval``) are self-contained: Taylor / atanh series with explicit
remainder bounds, plus argument reduction, evaluated in exact rational
arithmetic and rounded outward.  No external rigorous-numerics package is
involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

RatLike = Union[Fraction, int]

#: Default number of fractional bits kept by outward rounding.
DEFAULT_BITS = 128


def _to_fraction(x: RatLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def floor_to_bits(x: Fraction, bits: int) -> Fraction:
    """Largest multiple of 2**-bits that is <= x."""
    scaled = (x.numerator << bits) // x.denominator
    return Fraction(scaled, 1 << bits)


def ceil_to_bits(x: Fraction, bits: int) -> Fraction:
    """Smallest multiple of 2**-bits that is >= x."""
    scaled = -((-x.numerator << bits) // x.denominator)
    return Fraction(scaled, 1 << bits)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with rational endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not isinstance(self.lo, Fraction):
            object.__setattr__(self, "lo", _to_fraction(self.lo))
        if not isinstance(self.hi, Fraction):
            object.__setattr__(self, "hi", _to_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"invalid interval: lo={self.lo} > hi={self.hi}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def point(cls, x: RatLike) -> "Interval":
        f = _to_fraction(x)
        return cls(f, f)

    @classmethod
    def hull(cls, *items: "Interval") -> "Interval":
        if not items:
            raise ValueError("hull of nothing")
        return cls(min(i.lo for i in items), max(i.hi for i in items))

    # -- basic queries -----------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: RatLike) -> bool:
        f = _to_fraction(x)
        return self.lo <= f <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def is_point(self) -> bool:
        return self.lo == self.hi

    # certified comparisons: True only when every point of self relates to
    # every point of other/x as stated.
    def strictly_below(self, x: RatLike) -> bool:
        return self.hi < _to_fraction(x)

    def strictly_above(self, x: RatLike) -> bool:
        return self.lo > _to_fraction(x)

    def at_least(self, x: RatLike) -> bool:
        return self.lo >= _to_fraction(x)

    def at_most(self, x: RatLike) -> bool:
        return self.hi <= _to_fraction(x)

    # -- arithmetic (enclosures) -------------------------------------------

    def __add__(self, other: "Interval | RatLike") -> "Interval":
        if isinstance(other, Interval):
            return Interval(self.lo + other.lo, self.hi + other.hi)
        f = _to_fraction(other)
        return Interval(self.lo + f, self.hi + f)

    __radd__ = __add__

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: "Interval | RatLike") -> "Interval":
        if isinstance(other, Interval):
            return Interval(self.lo - other.hi, self.hi - other.lo)
        f = _to_fraction(other)
        return Interval(self.lo - f, self.hi - f)

    def __rsub__(self, other: RatLike) -> "Interval":
        return (-self) + other

    def __mul__(self, other: "Interval | RatLike") -> "Interval":
        if isinstance(other, Interval):
            p = (
                self.lo * other.lo,
                self.lo * other.hi,
                self.hi * other.lo,
                self.hi * other.hi,
            )
            return Interval(min(p), max(p))
        f = _to_fraction(other)
        if f >= 0:
            return Interval(self.lo * f, self.hi * f)
        return Interval(self.hi * f, self.lo * f)

    __rmul__ = __mul__

    def __truediv__(self, other: "Interval | RatLike") -> "Interval":
        if isinstance(other, Interval):
            if other.lo <= 0 <= other.hi:
                raise ZeroDivisionError(f"division by interval containing 0: {other}")
            p = (
                self.lo / other.lo,
                self.lo / other.hi,
                self.hi / other.lo,
                self.hi / other.hi,
            )
            return Interval(min(p), max(p))
        f = _to_fraction(other)
        if f == 0:
            raise ZeroDivisionError("division by zero")
        if f > 0:
            return Interval(self.lo / f, self.hi / f)
        return Interval(self.hi / f, self.lo / f)

    def __rtruediv__(self, other: RatLike) -> "Interval":
        return Interval.point(other) / self

    # -- rounding ------------------------------------------------------------

    def round_out(self, bits: int = DEFAULT_BITS) -> "Interval":
        """Round endpoints outward to the dyadic grid 2**-bits (sound)."""
        return Interval(floor_to_bits(self.lo, bits), ceil_to_bits(self.hi, bits))

    def __repr__(self) -> str:  # compact, decimal-ish for debugging
        return f"Interval({float(self.lo):.12g}, {float(self.hi):.12g})"


def sqrt_interval(x: Interval, bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of sqrt over a nonnegative interval via integer square roots."""
    if x.lo < 0:
        raise ValueError("sqrt of interval with negative part")
    scale = 1 << (2 * bits)
    m_lo = (x.lo.numerator * scale) // x.lo.denominator
    lo = Fraction(isqrt(m_lo), 1 << bits)
    m_hi = -((-x.hi.numerator * scale) // x.hi.denominator)
    r = isqrt(m_hi)
    if r * r < m_hi:
        r += 1
    hi = Fraction(r, 1 << bits)
    return Interval(lo, hi)


def _exp_enclosure_small(q: Fraction, bits: int) -> Interval:
    """Enclosure of exp(q) for |q| <= 1/2 via Taylor series.

    Truncation after N terms leaves |R| <= 2*|q|**(N+1)/(N+1)!  because the
    term ratio is at most |q|/(N+2) <= 1/2.
    """
    tol = Fraction(1, 1 << (bits + 2))
    total = Fraction(1)
    term = Fraction(1)
    i = 0
    while True:
        i += 1
        term = term * q / i
        total += term
        bound = 2 * abs(term) * abs(q) / (i + 1)
        if bound <= tol:
            break
        if i > 500:  # unreachable for |q| <= 1/2
            raise ArithmeticError("exp series failed to converge")
    return Interval(total - bound, total + bound).round_out(bits)


def exp_fraction(q: Fraction, bits: int = DEFAULT_BITS) -> Interval:
    """Rigorous enclosure of exp(q) for a rational q.

    Argument is halved until |q| <= 1/2, then the series enclosure is
    squared back up with outward rounding at every step.
    """
    halvings = 0
    while abs(q) > Fraction(1, 2):
        q = q / 2
        halvings += 1
    enc = _exp_enclosure_small(q, bits + 2 * halvings)
    for _ in range(halvings):
        lo = max(enc.lo, Fraction(0))  # exp > 0; keep squaring monotone
        enc = Interval(lo * lo, enc.hi * enc.hi).round_out(bits + 2 * halvings)
    return enc.round_out(bits)


def exp_interval(x: Interval, bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of exp over an interval (monotone increasing)."""
    return Interval(exp_fraction(x.lo, bits).lo, exp_fraction(x.hi, bits).hi)


def _atanh_enclosure(z: Fraction, bits: int) -> Interval:
    """Enclosure of atanh(z) for |z| <= 1/3 via the odd power series."""
    if abs(z) > Fraction(1, 3):
        raise ValueError("atanh reduction out of range")
    tol = Fraction(1, 1 << (bits + 2))
    z2 = z * z
    total = z
    power = z
    i = 1
    while True:
        i += 2
        power *= z2
        total += power / i
        # tail: sum_{j>=i+2, odd} |z|^j / j <= |z|^(i+2)/((i+2)(1-z^2))
        bound = abs(power) * abs(z2) / ((i + 2) * (1 - z2))
        if bound <= tol:
            break
        if i > 2000:
            raise ArithmeticError("atanh series failed to converge")
    return Interval(total - bound, total + bound).round_out(bits)


def log2_enclosure(bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of log 2 = 2*atanh(1/3)."""
    a = _atanh_enclosure(Fraction(1, 3), bits + 2)
    return (a * 2).round_out(bits)


def log_fraction(q: Fraction, bits: int = DEFAULT_BITS) -> Interval:
    """Rigorous enclosure of log(q) for a rational q > 0.

    Writes q = m * 2**e with m in [3/4, 3/2), so log q = e*log2 + 2*atanh(z)
    with z = (m-1)/(m+1) in [-1/7, 1/5].
    """
    if q <= 0:
        raise ValueError("log of nonpositive value")
    e = 0
    m = q
    while m >= Fraction(3, 2):
        m /= 2
        e += 1
    while m < Fraction(3, 4):
        m *= 2
        e -= 1
    z = (m - 1) / (m + 1)
    body = _atanh_enclosure(z, bits + 2) * 2
    if e == 0:
        return body.round_out(bits)
    return (body + log2_enclosure(bits + 2) * e).round_out(bits)


def log_interval(x: Interval, bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of log over a strictly positive interval (monotone)."""
    if x.lo <= 0:
        raise ValueError("log of interval touching 0")
    return Interval(log_fraction(x.lo, bits).lo, log_fraction(x.hi, bits).hi)
