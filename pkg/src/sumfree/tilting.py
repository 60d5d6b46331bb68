"""Exponential tilting of the uniform distribution, with certified moments.

For X uniform on [0,1] the moment generating function and its derivatives
are rational functions of (lambda, e^lambda):

    M(l)   = (E - 1)/l
    M'(l)  = (l E - E + 1)/l^2
    M''(l) = ((l^2 - 2l + 2) E - 2)/l^3        with E = e^l.

The tilted variable X_sigma has density e^{sigma x} f(x) / M(sigma); its
mean is M'/M and its variance M''/M - (M'/M)^2.  Everything here is
evaluated in interval arithmetic over rational sigma, using the rigorous
exp enclosure, and refined until the requested output width is reached.

The module also locates the constants governing the behaviour of the sum
density near one third of its support: the root sigma* of K'(sigma) = 1/3
for the cumulant generating function K = log M, the first-order offset
alpha = -log 2 / (3 sigma*) of the optimal slice threshold from d/3, and
the proved two-sided bracket for alpha obtained from the tilt bounds at
sigma_1 = -3 and sigma_2 = -8/5.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PrecisionInsufficient
from .intervals import (
    DEFAULT_BITS,
    Interval,
    exp_fraction,
    log2_enclosure,
    sqrt_interval,
)

#: The two tilt parameters used by the asymptotic certificate.
SIGMA_1 = Fraction(-3)
SIGMA_2 = Fraction(-8, 5)


@dataclass(frozen=True)
class TiltParams:
    """Certified mean / standard deviation of a tilted uniform variable."""

    sigma: Fraction
    mean: Interval
    stddev: Interval


@dataclass(frozen=True)
class HeuristicConstants:
    """sigma*, alpha, and the proved alpha bracket.

    ``alpha_lo``/``alpha_hi`` are rationals that certifiably bracket
    [log2/9, 5*log2/24] from outside, so any statement proved for all alpha
    in [alpha_lo, alpha_hi] covers the true range.
    """

    sigma_star: Interval
    alpha: Interval
    alpha_lo: Fraction
    alpha_hi: Fraction


def _mgf_family(sigma: Fraction, bits: int):
    """Interval enclosures of (M, M', M'') at a nonzero rational tilt."""
    e = exp_fraction(sigma, bits)
    m = (e - 1) / sigma
    m1 = (e * sigma - e + 1) / (sigma * sigma)
    m2 = (e * (sigma * sigma - 2 * sigma + 2) - 2) / (sigma**3)
    return m, m1, m2


def tilted_moments(sigma, eps, bits: int = DEFAULT_BITS) -> TiltParams:
    """Mean and stddev enclosures of the tilted uniform, widths <= eps.

    sigma = 0 is the untilted uniform and returns the exact mean 1/2 with a
    sqrt(1/12) enclosure for the standard deviation.
    """
    sigma = Fraction(sigma)
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if sigma == 0:
        std = sqrt_interval(Interval.point(Fraction(1, 12)), bits)
        return TiltParams(sigma, Interval.point(Fraction(1, 2)), std)
    cur = bits
    for _ in range(8):
        m, m1, m2 = _mgf_family(sigma, cur)
        mean = (m1 / m).round_out(cur)
        var = (m2 / m - mean * mean).round_out(cur)
        if var.lo <= 0:
            cur *= 2
            continue
        std = sqrt_interval(var, cur)
        if mean.width <= eps and std.width <= eps:
            return TiltParams(sigma, mean, std)
        cur *= 2
    raise PrecisionInsufficient(f"tilted moments at sigma={sigma} did not reach eps={eps}")


def cgf_derivative(sigma: Fraction, bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of K'(sigma) = M'(sigma)/M(sigma) for rational sigma != 0."""
    m, m1, _ = _mgf_family(sigma, bits)
    return m1 / m


def heuristic_constants(eps, bits: int = DEFAULT_BITS) -> HeuristicConstants:
    """Certified sigma*, alpha, and the proved alpha bracket.

    sigma* is found by bisection of K'(sigma) - 1/3 on (-2.2, -2.1), where
    K' is increasing (K is convex).  alpha = -log2/(3 sigma*); the proved
    bracket endpoints are log2/9 and 5 log2/24, rounded outward.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    third = Fraction(1, 3)
    lo, hi = Fraction(-22, 10), Fraction(-21, 10)
    cur = bits
    if not cgf_derivative(lo, cur).strictly_below(third):
        raise PrecisionInsufficient("cannot certify K'(-2.2) < 1/3")
    if not cgf_derivative(hi, cur).strictly_above(third):
        raise PrecisionInsufficient("cannot certify K'(-2.1) > 1/3")
    while hi - lo > eps:
        mid = (lo + hi) / 2
        km = cgf_derivative(mid, cur)
        if km.strictly_below(third):
            lo = mid
        elif km.strictly_above(third):
            hi = mid
        else:
            cur *= 2
            if cur > 4096:
                raise PrecisionInsufficient(f"K' sign unresolved at {mid}")
    sigma_star = Interval(lo, hi)

    log2 = log2_enclosure(bits)
    alpha = (-log2 / (3 * sigma_star)).round_out(bits)
    # exp(-3 sigma_1 alpha) <= 2 <= exp(-3 sigma_2 alpha) solved at equality:
    bracket_lo = (log2 / (-3 * SIGMA_1)).round_out(bits)
    bracket_hi = (log2 / (-3 * SIGMA_2)).round_out(bits)
    return HeuristicConstants(
        sigma_star=sigma_star,
        alpha=alpha,
        alpha_lo=bracket_lo.lo,
        alpha_hi=bracket_hi.hi,
    )
