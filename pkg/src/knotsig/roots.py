"""Exact isolation of real polynomial roots inside (-1, 1).

Polynomials are tuples of integer coefficients in ascending order.  The
pipeline is the classical one: square-free part, exact extraction of
rational roots with deflation, then Sturm-sequence bisection for whatever
irrational roots remain.  Each irrational root is handed back as an
``Abscissa``: an integer polynomial together with an isolating interval
with rational endpoints on which the polynomial changes sign, refinable to
any width by bisection.  Rational roots are stored exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

IntPoly = tuple[int, ...]


def poly_strip(coeffs: Sequence[int]) -> IntPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_degree(p: IntPoly) -> int:
    return len(p) - 1


def poly_eval(p: Sequence, x: Fraction | int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p: IntPoly) -> IntPoly:
    return poly_strip(tuple(i * c for i, c in enumerate(p) if i))


def _poly_primitive(p: Sequence[Fraction]) -> IntPoly:
    """Clear denominators and divide by the content; sign of the lead kept."""
    if not p:
        return ()
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    if g:
        ints = [c // g for c in ints]
    return poly_strip(ints)


def _poly_rem(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    f = list(f)
    dg = len(g) - 1
    lead = g[-1]
    while len(f) - 1 >= dg and any(f):
        while f and f[-1] == 0:
            f.pop()
        if len(f) - 1 < dg:
            break
        q = f[-1] / lead
        shift = len(f) - 1 - dg
        for i, c in enumerate(g):
            f[shift + i] -= q * c
        f.pop()
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd of two integer polynomials (Euclid over Q)."""
    f = [Fraction(c) for c in a]
    g = [Fraction(c) for c in b]
    while g:
        f, g = g, _poly_rem(f, g)
    return _poly_primitive(f)


def square_free_part(p: IntPoly) -> IntPoly:
    """p divided by gcd(p, p'); has the same roots, all simple."""
    if poly_degree(p) < 1:
        return p
    g = poly_gcd(p, poly_derivative(p))
    if poly_degree(g) < 1:
        return p
    q, r = _poly_divmod([Fraction(c) for c in p], [Fraction(c) for c in g])
    if r:
        raise ArithmeticError("square-free division left a remainder")
    return _poly_primitive(q)


def _poly_divmod(
    f: list[Fraction], g: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    quot = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    rem = list(f)
    dg = len(g) - 1
    lead = g[-1]
    while len(rem) - 1 >= dg and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dg:
            break
        q = rem[-1] / lead
        shift = len(rem) - 1 - dg
        quot[shift] = q
        for i, c in enumerate(g):
            rem[shift + i] -= q * c
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots_in_unit(p: IntPoly) -> tuple[list[Fraction], IntPoly]:
    """All rational roots of p in (-1, 1), plus p with those roots deflated.

    Multiple roots are deflated to multiplicity zero, so the returned
    polynomial has no rational roots inside (-1, 1) at all.
    """
    roots: set[Fraction] = set()
    work = [Fraction(c) for c in p]
    # roots at 0 show up as trailing zero coefficients
    while work and work[0] == 0:
        work.pop(0)
        roots.add(Fraction(0))
    if len(work) <= 1:
        return sorted(roots), _poly_primitive(work)
    ints = _poly_primitive(work)
    candidates: set[Fraction] = set()
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            if num < den and gcd(num, den) == 1:
                candidates.add(Fraction(num, den))
                candidates.add(Fraction(-num, den))
    work = [Fraction(c) for c in ints]
    for r in sorted(candidates):
        while len(work) > 1 and poly_eval(work, r) == 0:
            roots.add(r)
            work, rem = _poly_divmod(work, [-r, Fraction(1)])
            assert not rem
    return sorted(roots), _poly_primitive(work)


def _sturm_chain(p: IntPoly) -> list[list[Fraction]]:
    chain = [[Fraction(c) for c in p]]
    deriv = [Fraction(c) for c in poly_derivative(p)]
    if deriv:
        chain.append(deriv)
    while len(chain[-1]) > 1:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _sign_variations(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = poly_eval(poly, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def isolate_roots(p: IntPoly, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for the roots of p in (lo, hi).

    Requires p square-free with p(lo) != 0, p(hi) != 0, and no rational
    roots in the interval (so bisection midpoints are never roots).  Each
    returned interval contains exactly one root and p changes sign on it.
    """
    if poly_degree(p) < 1:
        return []
    if poly_eval(p, lo) == 0 or poly_eval(p, hi) == 0:
        raise ValueError("polynomial vanishes at an interval endpoint")
    chain = _sturm_chain(p)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, _sign_variations(chain, lo), _sign_variations(chain, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count == 0:
            continue
        if count == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        vm = _sign_variations(chain, m)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))
    out.sort()
    return out


def refine_to_width(
    p: IntPoly, lo: Fraction, hi: Fraction, max_width: Fraction
) -> tuple[Fraction, Fraction]:
    """Shrink a sign-change interval of p below max_width by bisection."""
    flo = poly_eval(p, lo)
    while hi - lo > max_width:
        m = (lo + hi) / 2
        fm = poly_eval(p, m)
        if fm == 0:
            raise ArithmeticError("bisection midpoint is a root; deflate first")
        if (flo > 0) != (fm > 0):
            hi = m
        else:
            lo, flo = m, fm
    return lo, hi


@dataclass(frozen=True)
class Abscissa:
    """An exact real number in (-1, 1): the cosine of a jump angle.

    Either ``value`` is set (rational case, with lo == hi == value) or
    ``poly`` is an integer polynomial having exactly one root in the open
    interval (lo, hi), with a sign change across it.  ``refined`` returns a
    new Abscissa for the same number with a tighter interval, so values are
    immutable and refinement is pure.
    """

    value: Fraction | None
    poly: IntPoly | None
    lo: Fraction
    hi: Fraction

    @classmethod
    def rational(cls, r: Fraction | int) -> "Abscissa":
        r = Fraction(r)
        if not -1 < r < 1:
            raise ValueError("abscissa must lie in (-1, 1)")
        return cls(value=r, poly=None, lo=r, hi=r)

    @classmethod
    def algebraic(cls, poly: IntPoly, lo: Fraction, hi: Fraction) -> "Abscissa":
        if poly_eval(poly, lo) * poly_eval(poly, hi) >= 0:
            raise ValueError("isolating interval must carry a sign change")
        return cls(value=None, poly=poly, lo=lo, hi=hi)

    @property
    def is_rational(self) -> bool:
        return self.value is not None

    def bounds(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    def width(self) -> Fraction:
        return self.hi - self.lo

    def refined(self, max_width: Fraction) -> "Abscissa":
        if self.is_rational or self.width() <= max_width:
            return self
        lo, hi = refine_to_width(self.poly, self.lo, self.hi, max_width)
        return Abscissa(value=None, poly=self.poly, lo=lo, hi=hi)

    def excludes(self, r: Fraction) -> "Abscissa":
        """Refine until the rational r is strictly outside [lo, hi]."""
        if self.is_rational:
            if self.value == r:
                raise ValueError("cannot exclude the abscissa itself")
            return self
        cur = self
        while cur.lo <= r <= cur.hi:
            cur = cur.refined(cur.width() / 4)
        return cur

    def approx(self) -> float:
        if self.is_rational:
            return float(self.value)
        return float((self.lo + self.hi) / 2)

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.value)
        terms = "+".join(
            f"{c}x^{i}" for i, c in enumerate(self.poly) if c
        ).replace("+-", "-")
        return f"root of {terms} in ({self.lo},{self.hi})"
