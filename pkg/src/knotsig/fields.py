"""Exact arithmetic kernels shared by the signature and independence machinery.

Two small number systems are implemented here, both with exact rational
coordinates and no floating point anywhere:

* ``QuadReal`` -- elements a + b*sqrt(d) of a real quadratic extension
  Q(sqrt(d)) with d a nonnegative rational.  If d happens to be a rational
  square the radical collapses into the rational part at construction, so
  arithmetic and sign tests stay exact for every admissible d.  These carry
  the entries of unit-circle Hermitian forms, where d = 1 - x**2 for the
  rational abscissa x.

* ``MultiQuadElement`` -- elements of Q(xi_1, ..., xi_n) where each
  generator satisfies xi_j**2 = -p_j*(p_j - 2) for an ascending list of odd
  primes p_j.  Coordinates are stored densely, one rational per subset of
  generators (2**n in total), which is the right trade-off at the small n
  this package needs.

The module also provides an exact signature routine for symmetric matrices
over either coordinate field, and the square-class rank computation used to
certify that the multiquadratic field has full degree 2**n.

All values are immutable; every function is pure.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


class MismatchedField(ValueError):
    """Raised when two elements of different field contexts are combined."""


class ZeroInput(ValueError):
    """Raised when a square-class computation receives the integer 0."""


Rational = int | Fraction


def _sqrt_exact(q: Fraction) -> Fraction | None:
    """Rational square root of q, or None when q is not a rational square."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


class QuadReal:
    """a + b*sqrt(d) with a, b, d rational and d >= 0, fixed per context.

    Square d (including 0) collapses to a purely rational value, so equality
    stays componentwise and sign tests never need to special-case it.
    """

    __slots__ = ("d", "a", "b")

    def __init__(self, d: Rational, a: Rational, b: Rational = 0) -> None:
        d = Fraction(d)
        a = Fraction(a)
        b = Fraction(b)
        if d < 0:
            raise ValueError("QuadReal requires a nonnegative discriminant")
        if b:
            root = _sqrt_exact(d)
            if root is not None:
                a += b * root
                b = Fraction(0)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QuadReal is immutable")

    def _coerce(self, other: object) -> "QuadReal | None":
        if isinstance(other, QuadReal):
            if other.d != self.d:
                raise MismatchedField("QuadReal operands from different Q(sqrt(d))")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadReal(self.d, other)
        return None

    def __add__(self, other: object) -> "QuadReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadReal(self.d, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QuadReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadReal(self.d, self.a - o.a, self.b - o.b)

    def __rsub__(self, other: object) -> "QuadReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadReal(self.d, o.a - self.a, o.b - self.b)

    def __neg__(self) -> "QuadReal":
        return QuadReal(self.d, -self.a, -self.b)

    def __mul__(self, other: object) -> "QuadReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadReal(
            self.d,
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "QuadReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.a * o.a - o.b * o.b * self.d
        if not norm:
            raise ZeroDivisionError("division by zero QuadReal")
        return self * QuadReal(self.d, o.a / norm, -o.b / norm)

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, QuadReal):
            return NotImplemented
        return self.d == other.d and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.d, self.a, self.b))

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1} of a + b*sqrt(d), using sqrt(d) > 0."""
        a, b = self.a, self.b
        if not b:
            return (a > 0) - (a < 0)
        if not a:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # mixed signs: compare a**2 with b**2 * d
        cmp = a * a - b * b * self.d
        if cmp == 0:
            return 0
        bigger_rational = cmp > 0
        return (1 if bigger_rational else -1) if a > 0 else (-1 if bigger_rational else 1)

    def __repr__(self) -> str:
        return f"QuadReal(d={self.d}, a={self.a}, b={self.b})"


def quad_sign(x: QuadReal) -> int:
    """Exact sign of a QuadReal value."""
    return x.sign()


def _sign_of(value: QuadReal | Fraction | int) -> int:
    if isinstance(value, QuadReal):
        return value.sign()
    return (value > 0) - (value < 0)


def symmetric_signature(rows: Sequence[Sequence[QuadReal | Fraction | int]]) -> int:
    """Signature of a symmetric matrix over Q or Q(sqrt(d)).

    Congruence diagonalization with exact arithmetic; degenerate directions
    contribute 0.  The input is not modified.
    """
    n = len(rows)
    mat = [list(row) for row in rows]
    live = list(range(n))
    sig = 0
    while live:
        pivot = next((k for k in live if _sign_of(mat[k][k]) != 0), None)
        if pivot is None:
            off = None
            for ii, i in enumerate(live):
                for j in live[ii + 1:]:
                    if _sign_of(mat[i][j]) != 0:
                        off = (i, j)
                        break
                if off:
                    break
            if off is None:
                break  # remaining block is zero
            i, j = off
            # basis change e_i <- e_i + e_j turns the (i, i) entry into
            # 2 * mat[i][j] != 0, after which a diagonal pivot exists
            for k in live:
                mat[i][k] = mat[i][k] + mat[j][k]
            for k in live:
                mat[k][i] = mat[k][i] + mat[k][j]
            continue
        p = mat[pivot][pivot]
        sig += _sign_of(p)
        live.remove(pivot)
        for r in live:
            factor = mat[r][pivot] / p
            if _sign_of(factor) == 0:
                continue
            for c in live:
                mat[r][c] = mat[r][c] - factor * mat[pivot][c]
    return sig


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def trial_factor(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division."""
    if n < 1:
        raise ValueError("trial_factor expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def square_class_rank(values: Iterable[int]) -> int:
    """Rank over F_2 of the square classes of the given nonzero integers.

    Each value is reduced to its vector of odd-exponent primes together with
    a sign bit; the rank of those vectors equals the degree of independence
    of the values in Q*/Q*^2.
    """
    basis: dict[int, int] = {}
    rank = 0
    for v in values:
        if v == 0:
            raise ZeroInput("square classes are only defined for nonzero integers")
        mask = 1 if v < 0 else 0
        for p, e in trial_factor(abs(v)).items():
            if e % 2:
                mask |= 1 << p  # prime p owns bit p; sparse but ints are free
        cur = mask
        while cur:
            top = cur.bit_length() - 1
            if top in basis:
                cur ^= basis[top]
            else:
                basis[top] = cur
                rank += 1
                break
    return rank


class MultiQuadElement:
    """Element of Q(xi_1, ..., xi_n) with xi_j**2 = -p_j*(p_j - 2).

    Coordinates are indexed by subsets of generators encoded as bitmasks:
    ``coords[m]`` is the rational coefficient of prod(xi_j for j in m).
    The representation is canonical; multiplication applies the defining
    relations and nothing else is ever reduced.
    """

    __slots__ = ("primes", "coords")

    def __init__(self, primes: Sequence[int], coords: Sequence[Rational]) -> None:
        primes = tuple(int(p) for p in primes)
        for i, p in enumerate(primes):
            if p < 3 or not is_prime(p):
                raise ValueError(f"generator prime {p} must be an odd prime")
            if i and primes[i - 1] >= p:
                raise ValueError("generator primes must be strictly ascending")
        size = 1 << len(primes)
        if len(coords) != size:
            raise ValueError(f"expected {size} coordinates, got {len(coords)}")
        object.__setattr__(self, "primes", primes)
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MultiQuadElement is immutable")

    @classmethod
    def zero(cls, primes: Sequence[int]) -> "MultiQuadElement":
        return cls(primes, [0] * (1 << len(primes)))

    @classmethod
    def from_rational(cls, primes: Sequence[int], value: Rational) -> "MultiQuadElement":
        coords = [Fraction(0)] * (1 << len(primes))
        coords[0] = Fraction(value)
        return cls(primes, coords)

    @classmethod
    def one(cls, primes: Sequence[int]) -> "MultiQuadElement":
        return cls.from_rational(primes, 1)

    @classmethod
    def generator(cls, primes: Sequence[int], j: int) -> "MultiQuadElement":
        """The j-th generator xi_j (0-based)."""
        coords = [Fraction(0)] * (1 << len(primes))
        coords[1 << j] = Fraction(1)
        return cls(primes, coords)

    def _check_field(self, other: "MultiQuadElement") -> None:
        if self.primes != other.primes:
            raise MismatchedField(
                f"field mismatch: {self.primes} vs {other.primes}"
            )

    def __add__(self, other: object) -> "MultiQuadElement":
        if isinstance(other, (int, Fraction)):
            other = MultiQuadElement.from_rational(self.primes, other)
        if not isinstance(other, MultiQuadElement):
            return NotImplemented
        self._check_field(other)
        return MultiQuadElement(
            self.primes, [a + b for a, b in zip(self.coords, other.coords)]
        )

    __radd__ = __add__

    def __sub__(self, other: object) -> "MultiQuadElement":
        if isinstance(other, (int, Fraction)):
            other = MultiQuadElement.from_rational(self.primes, other)
        if not isinstance(other, MultiQuadElement):
            return NotImplemented
        self._check_field(other)
        return MultiQuadElement(
            self.primes, [a - b for a, b in zip(self.coords, other.coords)]
        )

    def __rsub__(self, other: object) -> "MultiQuadElement":
        return (-self) + other

    def __neg__(self) -> "MultiQuadElement":
        return MultiQuadElement(self.primes, [-c for c in self.coords])

    def __mul__(self, other: object) -> "MultiQuadElement":
        if isinstance(other, (int, Fraction)):
            return MultiQuadElement(
                self.primes, [c * other for c in self.coords]
            )
        if not isinstance(other, MultiQuadElement):
            return NotImplemented
        self._check_field(other)
        squares = [-p * (p - 2) for p in self.primes]
        out = [Fraction(0)] * len(self.coords)
        for u, cu in enumerate(self.coords):
            if not cu:
                continue
            for v, cv in enumerate(other.coords):
                if not cv:
                    continue
                f = cu * cv
                m = u & v
                while m:
                    j = (m & -m).bit_length() - 1
                    f *= squares[j]
                    m &= m - 1
                out[u ^ v] += f
        return MultiQuadElement(self.primes, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiQuadElement":
        if k < 0:
            raise ValueError("negative powers need a unit inverse; conjugate instead")
        result = MultiQuadElement.one(self.primes)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiQuadElement.from_rational(self.primes, other)
        if not isinstance(other, MultiQuadElement):
            return NotImplemented
        return self.primes == other.primes and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.primes, self.coords))

    def conjugate(self) -> "MultiQuadElement":
        """Complex conjugation: negates every odd-degree coordinate."""
        out = [
            -c if bin(m).count("1") % 2 else c
            for m, c in enumerate(self.coords)
        ]
        return MultiQuadElement(self.primes, out)

    def is_real(self) -> bool:
        """True iff every odd-degree coordinate vanishes."""
        return all(
            not c for m, c in enumerate(self.coords) if bin(m).count("1") % 2
        )

    def rational_part(self) -> Fraction:
        return self.coords[0]

    def __repr__(self) -> str:
        nz = {m: str(c) for m, c in enumerate(self.coords) if c}
        return f"MultiQuadElement(primes={self.primes}, coords={nz})"
