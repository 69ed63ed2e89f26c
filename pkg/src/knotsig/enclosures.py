"""Validated rational enclosures for pi, cos, and arccos.

Everything here returns pairs (lo, hi) of exact fractions with the property
lo <= value <= hi.  The building blocks are alternating series with explicit
remainder bounds (Machin's formula for pi, the Taylor series for cos) and a
bisection for arccos that only ever compares exact quantities.  Directed
rounding to dyadic fractions keeps denominators from compounding.

The precision parameter ``bits`` asks for enclosures of width about
2**-bits; callers widen it until their derived quantity is tight enough.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Interval = tuple[Fraction, Fraction]


def round_down(x: Fraction, bits: int) -> Fraction:
    """Largest multiple of 2**-bits that is <= x."""
    scale = 1 << bits
    return Fraction(x.numerator * scale // x.denominator, scale)


def round_up(x: Fraction, bits: int) -> Fraction:
    """Smallest multiple of 2**-bits that is >= x."""
    scale = 1 << bits
    return Fraction(-((-x.numerator * scale) // x.denominator), scale)


def round_outward(iv: Interval, bits: int) -> Interval:
    return round_down(iv[0], bits), round_up(iv[1], bits)


def _arctan_recip_bounds(k: int, bits: int) -> Interval:
    # arctan(1/k) = sum (-1)^i / ((2i+1) k^(2i+1)); terms strictly decrease,
    # so the truncation error is bounded by the first omitted term
    target = Fraction(1, 1 << (bits + 2))
    total = Fraction(0)
    i = 0
    power = Fraction(1, k)
    k2 = k * k
    while True:
        term = power / (2 * i + 1)
        if term <= target:
            break
        total += term if i % 2 == 0 else -term
        power /= k2
        i += 1
    return total - target, total + target


@lru_cache(maxsize=None)
def pi_bounds(bits: int) -> Interval:
    """Enclosure of pi via pi/4 = 4*arctan(1/5) - arctan(1/239)."""
    a5 = _arctan_recip_bounds(5, bits + 6)
    a239 = _arctan_recip_bounds(239, bits + 6)
    lo = 16 * a5[0] - 4 * a239[1]
    hi = 16 * a5[1] - 4 * a239[0]
    return round_outward((lo, hi), bits)


def cos_bounds(t: Fraction, bits: int) -> Interval:
    """Enclosure of cos(t) for rational 0 <= t <= 2.

    Partial sums of the Taylor series bracket the value once the terms
    decrease, which holds from the quadratic term on for t <= 2.
    """
    if t < 0 or t > 2:
        raise ValueError("cos_bounds expects t in [0, 2]")
    target = Fraction(1, 1 << (bits + 2))
    t2 = t * t
    total = Fraction(1)
    term = Fraction(1)
    i = 0
    while True:
        i += 1
        term *= t2 / ((2 * i - 1) * (2 * i))
        if i >= 2 and term <= target:
            break
        total += term if i % 2 == 0 else -term
    return round_outward((total - term, total + term), bits)


def arccos_bounds(x: Fraction, bits: int) -> Interval:
    """Enclosure of arccos(x) for rational x in [-1, 1].

    For x in (0, 1) a bisection maintains cos(a) >= x >= cos(b); negative
    arguments go through arccos(x) = pi - arccos(-x) so that the bracket
    never has to pin down the flat region of cos near pi.
    """
    x = Fraction(x)
    if x < -1 or x > 1:
        raise ValueError("arccos_bounds expects x in [-1, 1]")
    if x == 1:
        return Fraction(0), Fraction(0)
    if x == -1:
        return pi_bounds(bits)
    if x < 0:
        plo, phi = pi_bounds(bits + 2)
        rlo, rhi = arccos_bounds(-x, bits + 2)
        return plo - rhi, phi - rlo
    if x == 0:
        plo, phi = pi_bounds(bits + 1)
        return plo / 2, phi / 2
    lo = Fraction(0)
    hi = Fraction(8, 5)  # cos(8/5) < 0 <= x, so the root is inside
    width_target = Fraction(1, 1 << bits)
    eval_bits = bits + 8
    while hi - lo > width_target:
        mid = (lo + hi) / 2
        guard = eval_bits
        while True:
            clo, chi = cos_bounds(mid, guard)
            if clo > x:
                lo = mid  # cos(mid) > x, so arccos(x) > mid
                break
            if chi < x:
                hi = mid
                break
            guard *= 2
            if guard > 1 << 20:
                # cos(mid) = x is impossible for rational mid != 0 and
                # rational x, so refinement always separates eventually
                raise RuntimeError("arccos bisection failed to separate")
    return lo, hi


def interval_add(a: Interval, b: Interval) -> Interval:
    return a[0] + b[0], a[1] + b[1]


def interval_sub(a: Interval, b: Interval) -> Interval:
    return a[0] - b[1], a[1] - b[0]


def interval_scale(a: Interval, c: int) -> Interval:
    if c >= 0:
        return c * a[0], c * a[1]
    return c * a[1], c * a[0]


def interval_div_pos(num: Interval, den: Interval) -> Interval:
    """num / den for an interval den that is strictly positive."""
    if den[0] <= 0:
        raise ValueError("divisor interval must be strictly positive")
    lo = min(num[0] / den[0], num[0] / den[1])
    hi = max(num[1] / den[0], num[1] / den[1])
    return lo, hi
