"""Signature profiles on the unit circle and their normalized integral.

For a Seifert matrix S and omega = exp(i*theta) on the upper unit circle,
the form

    H(omega) = (1 - conj(omega)) S + (1 - omega) S^T
             = (1 - x) (S + S^T) + i y (S - S^T),      x = cos(theta),

with y = sqrt(1 - x**2) >= 0, is Hermitian.  Its signature is computed
exactly: the complex form A + iB doubles to the real symmetric form
[[A, -B], [B, A]] over Q(sqrt(1 - x**2)), whose signature is twice the
complex one, and congruence elimination over that field needs nothing but
exact rational arithmetic and an exact sign for a + b*sqrt(d).

The signature is a step function of theta.  It can only jump where the
Alexander polynomial vanishes on the circle, i.e. at the roots in (-1, 1)
of the integer polynomial P with P(cos theta) = Delta(exp(i theta)); those
roots are isolated exactly, one sample per complementary arc determines the
profile, and the integral over the circle (normalized to total length one)
collapses to the finite sum

    rho = sum_k c_k * (pi - theta_k) / pi,

over the jumps, where c_k is the (even) jump of the signature at theta_k.
The numeric value of that sum is returned as a rational enclosure of any
requested width, never as a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .enclosures import (
    Interval,
    arccos_bounds,
    interval_add,
    interval_div_pos,
    interval_scale,
    interval_sub,
    pi_bounds,
)
from .fields import QuadReal, symmetric_signature
from .roots import (
    Abscissa,
    IntPoly,
    isolate_roots,
    poly_strip,
    rational_roots_in_unit,
    square_free_part,
)
from .seifert import LaurentPolynomial, SeifertMatrix, alexander


class InternalInconsistency(RuntimeError):
    """A cross-check between two exact computations disagreed."""


@dataclass(frozen=True)
class HermitianForm:
    """Exact Hermitian matrix A + iB with entries in Q(sqrt(d)), d = 1 - x**2.

    Entries are pairs (real, imag) of QuadReal values; A is symmetric and B
    antisymmetric, which is checked at construction.
    """

    disc: Fraction
    entries: tuple[tuple[tuple[QuadReal, QuadReal], ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i in range(n):
            if len(self.entries[i]) != n:
                raise ValueError("entries must form a square matrix")
            for j in range(n):
                re_ij, im_ij = self.entries[i][j]
                re_ji, im_ji = self.entries[j][i]
                if re_ij != re_ji or im_ij != -im_ji:
                    raise ValueError("matrix is not conjugate-symmetric")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def doubled(self) -> list[list[QuadReal]]:
        """Real symmetric [[A, -B], [B, A]] with twice the signature."""
        n = self.dim
        out = [[None] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                re, im = self.entries[i][j]
                out[i][j] = re
                out[n + i][n + j] = re
                out[i][n + j] = -im
                out[n + i][j] = im
        return out


def hermitian_form(matrix: SeifertMatrix, x: Fraction, upper: bool = True) -> HermitianForm:
    """The circle form at cos(theta) = x, on the upper half circle by default."""
    x = Fraction(x)
    if not -1 <= x <= 1:
        raise ValueError("x must lie in [-1, 1]")
    d = 1 - x * x
    n = matrix.dim
    one_minus_x = 1 - x
    ysign = 1 if upper else -1
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            sym = matrix.entries[i][j] + matrix.entries[j][i]
            skew = matrix.entries[i][j] - matrix.entries[j][i]
            re = QuadReal(d, one_minus_x * sym)
            im = QuadReal(d, 0, ysign * skew)
            row.append((re, im))
        rows.append(tuple(row))
    return HermitianForm(disc=d, entries=tuple(rows))


def signature_at(matrix: SeifertMatrix, x: Fraction) -> int:
    """Exact circle signature at cos(theta) = x, for rational x in [-1, 1].

    Degenerate directions contribute zero.  At x = 1 (theta = 0) the form
    vanishes and the signature is 0.
    """
    x = Fraction(x)
    if not -1 <= x <= 1:
        raise ValueError("x must lie in [-1, 1]")
    if x == 1:
        return 0
    form = hermitian_form(matrix, x)
    sig2 = symmetric_signature(form.doubled())
    if sig2 % 2:
        raise InternalInconsistency("doubled form must have even signature")
    return sig2 // 2


def cosine_polynomial(delta: LaurentPolynomial) -> IntPoly:
    """Integer P with P(cos theta) = Delta(exp(i theta)).

    Uses t**k + t**-k = 2*T_k(x) on the unit circle, where T_k is the
    Chebyshev polynomial built by the integer recurrence.
    """
    if not delta.is_symmetric():
        raise ValueError("cosine rewrite needs a symmetric Laurent polynomial")
    _, top = delta.span()
    acc = [0] * (top + 1)
    acc[0] = delta.coeff(0)
    t_prev: list[int] = [1]
    t_cur: list[int] = [0, 1]
    for k in range(1, top + 1):
        c = delta.coeff(k)
        if c:
            for i, tc in enumerate(t_cur):
                acc[i] += 2 * c * tc
        # T_{k+1} = 2x T_k - T_{k-1}
        t_next = [0] + [2 * v for v in t_cur]
        for i, v in enumerate(t_prev):
            t_next[i] -= v
        t_prev, t_cur = t_cur, t_next
    return poly_strip(acc)


def circle_roots(delta: LaurentPolynomial) -> list[Abscissa]:
    """All x = cos(theta), theta in (0, pi), with Delta(exp(i theta)) = 0.

    Returned in ascending order as exact abscissas, pairwise strictly
    separated and strictly inside (-1, 1).
    """
    p = cosine_polynomial(delta)
    if len(p) <= 1:
        return []
    sf = square_free_part(p)
    rationals, remainder = rational_roots_in_unit(sf)
    found: list[Abscissa] = [Abscissa.rational(r) for r in rationals]
    for lo, hi in isolate_roots(remainder, Fraction(-1), Fraction(1)):
        a = Abscissa.algebraic(remainder, lo, hi)
        for r in rationals:
            a = a.excludes(r)
        found.append(a)
    return _separate(found)


def _separate(items: list[Abscissa]) -> list[Abscissa]:
    """Sort abscissas and refine until strictly inside (-1, 1) and strictly
    pairwise disjoint, so that every complementary arc is a real interval."""
    refined: list[Abscissa] = []
    for a in items:
        while a.lo <= -1 or a.hi >= 1:
            a = a.refined(a.width() / 4)
        refined.append(a)
    refined.sort(key=lambda a: (a.lo, a.hi))
    for i in range(len(refined) - 1):
        left, right = refined[i], refined[i + 1]
        while left.hi >= right.lo:
            left = left.refined(left.width() / 4)
            right = right.refined(right.width() / 4)
        refined[i], refined[i + 1] = left, right
    return refined


@dataclass(frozen=True)
class SignatureProfile:
    """Complete description of theta -> signature on (0, pi].

    ``jumps`` holds the cosines of the jump angles in ascending x order
    (descending angle).  ``arc_values`` holds the constant signature on the
    open arcs in ascending angle order, so it has one more entry than
    ``jumps`` and starts with 0.  ``endpoint_value`` is the signature at
    theta = pi, i.e. the ordinary signature.
    """

    jumps: tuple[Abscissa, ...]
    arc_values: tuple[int, ...]
    endpoint_value: int

    def __post_init__(self) -> None:
        if len(self.arc_values) != len(self.jumps) + 1:
            raise ValueError("need exactly one more arc value than jumps")
        if self.arc_values and self.arc_values[0] != 0:
            raise ValueError("the arc at theta -> 0 must carry signature 0")
        for a, b in zip(self.arc_values, self.arc_values[1:]):
            if a == b:
                raise ValueError("adjacent arcs with equal value must be merged")

    def theta_ordered_jumps(self) -> list[Abscissa]:
        """Jump abscissas in ascending angle order."""
        return list(reversed(self.jumps))

    def jump_sizes(self) -> list[int]:
        """Signature increments in ascending angle order."""
        return [
            self.arc_values[i + 1] - self.arc_values[i]
            for i in range(len(self.jumps))
        ]


def signature_profile(matrix: SeifertMatrix) -> SignatureProfile:
    """Exact signature step function from one sample per arc.

    Every arc is sampled at two interior rational points; disagreement, a
    nonzero value on the first arc, or a mismatch with the endpoint value
    raises InternalInconsistency rather than returning a wrong profile.
    """
    delta = alexander(matrix)
    roots = circle_roots(delta)
    cuts_lo = [Fraction(-1)] + [r.hi for r in roots]
    cuts_hi = [r.lo for r in roots] + [Fraction(1)]
    values_x: list[int] = []
    for left, right in zip(cuts_lo, cuts_hi):
        mid = (left + right) / 2
        quarter = left + (right - left) / 4
        v = signature_at(matrix, mid)
        if signature_at(matrix, quarter) != v:
            raise InternalInconsistency("two samples on one arc disagree")
        values_x.append(v)
    # ascending angle = descending x
    values_theta = values_x[::-1]
    jumps_theta = roots[::-1]
    if values_theta[0] != 0:
        raise InternalInconsistency("signature near theta = 0 must vanish")
    kept_jumps: list[Abscissa] = []
    kept_values: list[int] = [values_theta[0]]
    for jump, value in zip(jumps_theta, values_theta[1:]):
        if value == kept_values[-1]:
            continue  # even multiplicity root: no sign change, drop it
        kept_jumps.append(jump)
        kept_values.append(value)
    endpoint = signature_at(matrix, Fraction(-1))
    if kept_values[-1] != endpoint:
        raise InternalInconsistency("last arc disagrees with theta = pi")
    return SignatureProfile(
        jumps=tuple(reversed(kept_jumps)),
        arc_values=tuple(kept_values),
        endpoint_value=endpoint,
    )


@dataclass(frozen=True)
class RhoValue:
    """The normalized signature integral as symbolic terms plus an enclosure.

    ``terms`` lists (c_k, x_k) in ascending angle order, standing for
    c_k * (pi - arccos(x_k)) / pi; ``lo`` and ``hi`` bound the total sum.
    The empty sum is exactly zero.
    """

    terms: tuple[tuple[int, Abscissa], ...]
    lo: Fraction
    hi: Fraction

    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value: Fraction | int) -> bool:
        return self.lo <= value <= self.hi

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def is_exactly_zero(self) -> bool:
        return not self.terms

    def symbolic(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for c, a in self.terms:
            sign = "-" if c < 0 else ("+" if pieces else "")
            arg = str(a.value) if a.is_rational else f"x{len(pieces)}"
            pieces.append(f"{sign}{abs(c)}(pi-arccos({arg}))/pi")
        out = "".join(pieces)
        notes = [
            f" where x{i} = {a}"
            for i, (_, a) in enumerate(self.terms)
            if not a.is_rational
        ]
        return out + "".join(notes)


def _term_enclosure(coeff: int, abscissa: Abscissa, bits: int, piv: Interval) -> Interval:
    width = Fraction(1, 1 << bits)
    a = abscissa.refined(width)
    if a.is_rational:
        theta = arccos_bounds(a.value, bits)
    else:
        # arccos is decreasing, so the angle bounds swap sides
        theta = (arccos_bounds(a.hi, bits)[0], arccos_bounds(a.lo, bits)[1])
    return interval_scale(interval_sub(piv, theta), coeff)


def rho(matrix: SeifertMatrix, tol: Fraction = Fraction(1, 10**9)) -> RhoValue:
    """Integral of the circle signature, normalized to total length one.

    The result is exact when there are no jumps; otherwise the returned
    enclosure has width at most ``tol``.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    profile = signature_profile(matrix)
    terms = tuple(zip(profile.jump_sizes(), profile.theta_ordered_jumps()))
    if not terms:
        return RhoValue(terms=(), lo=Fraction(0), hi=Fraction(0))
    bits = max(16, int(-math.log2(float(tol))) + 8)
    while True:
        piv = pi_bounds(bits)
        total: Interval = (Fraction(0), Fraction(0))
        for coeff, abscissa in terms:
            total = interval_add(total, _term_enclosure(coeff, abscissa, bits, piv))
        lo, hi = interval_div_pos(total, piv)
        if hi - lo <= tol:
            return RhoValue(terms=terms, lo=lo, hi=hi)
        bits *= 2
        if bits > 1 << 14:
            raise RuntimeError("enclosure failed to converge")


def jump_angle_enclosures(
    profile: SignatureProfile, bits: int = 64
) -> list[tuple[Fraction, Fraction]]:
    """Enclosures of theta/pi for each jump, in ascending angle order."""
    piv = pi_bounds(bits)
    out = []
    for a in profile.theta_ordered_jumps():
        a = a.refined(Fraction(1, 1 << bits))
        if a.is_rational:
            theta = arccos_bounds(a.value, bits)
        else:
            theta = (arccos_bounds(a.hi, bits)[0], arccos_bounds(a.lo, bits)[1])
        out.append(interval_div_pos(theta, piv))
    return out
