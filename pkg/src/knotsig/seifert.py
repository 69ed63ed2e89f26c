"""Seifert matrices and their classical abelian invariants.

Conventions
-----------
A Seifert matrix is a square integer matrix S of even size 2g whose skew
part S - S^T is unimodular, det(S - S^T) = 1.  The empty 0x0 matrix is the
unknot.  The Alexander polynomial is normalized as

    Delta(t) = t^(-g) * det(S - t*S^T),

a symmetric Laurent polynomial with Delta(1) = 1; that normalization is
forced, no sign or shift search is involved.  The knot determinant is
|Delta(-1)|, the Arf invariant is 0 exactly when Delta(-1) = +-1 mod 8, and
the ordinary signature is the signature of S + S^T.

Connected sum is the block sum of matrices, and the concordance inverse of
S is -S^T, which negates signatures and keeps Delta.

All types are immutable and every operation is pure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .fields import symmetric_signature


class OddDimension(ValueError):
    """Raised for square matrices of odd size."""


class NonUnimodularSkewPart(ValueError):
    """Raised when det(S - S^T) != 1."""


class LaurentPolynomial:
    """Integer Laurent polynomial in one variable t."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int]) -> None:
        cleaned = {int(e): int(c) for e, c in coeffs.items() if c}
        object.__setattr__(self, "_coeffs", cleaned)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LaurentPolynomial is immutable")

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    def coeff(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def exponents(self) -> list[int]:
        return sorted(self._coeffs)

    def coeffs(self) -> dict[int, int]:
        return dict(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def span(self) -> tuple[int, int]:
        """(lowest, highest) exponent; (0, 0) for constants and zero."""
        if not self._coeffs:
            return (0, 0)
        exps = self.exponents()
        return exps[0], exps[-1]

    def __call__(self, value: Fraction | int) -> Fraction:
        value = Fraction(value)
        if not value:
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at 0")
        total = Fraction(0)
        for e, c in self._coeffs.items():
            total += c * value**e
        return total

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    def is_symmetric(self) -> bool:
        """True iff coeff(k) == coeff(-k) for all k."""
        return all(self.coeff(-e) == c for e, c in self._coeffs.items())

    def substituted_power(self, w: int) -> "LaurentPolynomial":
        """The polynomial p(t**w); p(1) as a constant when w == 0."""
        if w == 0:
            return LaurentPolynomial({0: sum(self._coeffs.values())})
        return LaurentPolynomial({e * w: c for e, c in self._coeffs.items()})

    def normalized(self) -> "LaurentPolynomial":
        """Shift by t^k and scale by -1 if needed so that the result is
        symmetric and positive at t = 1; raises if no shift symmetrizes."""
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        lo, hi = self.span()
        if (lo + hi) % 2:
            raise ValueError("no integer shift symmetrizes this polynomial")
        shift = -(lo + hi) // 2
        shifted = LaurentPolynomial({e + shift: c for e, c in self._coeffs.items()})
        if not shifted.is_symmetric():
            raise ValueError("polynomial is not symmetric under any shift")
        at_one = sum(shifted._coeffs.values())
        if at_one == 0:
            raise ValueError("value at t = 1 vanishes; sign is undetermined")
        if at_one < 0:
            shifted = LaurentPolynomial({e: -c for e, c in shifted._coeffs.items()})
        return shifted

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces: list[str] = []
        for e in self.exponents():
            c = self._coeffs[e]
            sign = "-" if c < 0 else ("+" if pieces else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            pieces.append(f"{sign}{body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.coeffs()})"


class SeifertMatrix:
    """Immutable integer matrix of size 2g x 2g with unimodular skew part."""

    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence[int]]) -> None:
        entries = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
        if n % 2:
            raise OddDimension(f"size {n} is odd; Seifert matrices have even size")
        skew = [
            [entries[i][j] - entries[j][i] for j in range(n)] for i in range(n)
        ]
        if _det_int(skew) != 1:
            raise NonUnimodularSkewPart("det(S - S^T) must equal 1")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SeifertMatrix is immutable")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return len(self.entries) // 2

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i][j]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose_rows(self) -> list[list[int]]:
        n = self.dim
        return [[self.entries[j][i] for j in range(n)] for i in range(n)]

    def symmetrized(self) -> list[list[int]]:
        n = self.dim
        return [
            [self.entries[i][j] + self.entries[j][i] for j in range(n)]
            for i in range(n)
        ]

    def skew_part(self) -> list[list[int]]:
        n = self.dim
        return [
            [self.entries[i][j] - self.entries[j][i] for j in range(n)]
            for i in range(n)
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeifertMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"SeifertMatrix({self.rows()})"


def _det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def validate(rows: Sequence[Sequence[int]]) -> SeifertMatrix:
    """Check squareness, even size, and unimodular skew part."""
    return SeifertMatrix(rows)


def alexander(matrix: SeifertMatrix) -> LaurentPolynomial:
    """Delta(t) = t^(-g) det(S - t S^T), symmetric with Delta(1) = 1.

    The determinant of the polynomial matrix is recovered exactly from
    integer determinants at 2g + 1 interpolation points.
    """
    n = matrix.dim
    g = matrix.genus
    if n == 0:
        return LaurentPolynomial.one()
    s = matrix.entries
    points: list[int] = [0]
    v = 1
    while len(points) < n + 1:
        points.append(v)
        points.append(-v)
        v += 1
    points = points[: n + 1]
    values = []
    for t in points:
        m = [[s[i][j] - t * s[j][i] for j in range(n)] for i in range(n)]
        values.append(_det_int(m))
    coeffs = _interpolate_integer_poly(points, values)
    delta = LaurentPolynomial({e - g: c for e, c in enumerate(coeffs)})
    # forced by the skew-unimodularity of S; failures would mean a bug here
    if not delta.is_symmetric() or delta(1) != 1:
        raise ArithmeticError("normalization invariant violated")
    return delta


def _interpolate_integer_poly(points: Sequence[int], values: Sequence[int]) -> list[int]:
    """Coefficients (ascending) of the unique interpolating polynomial,
    which is required to come out integral."""
    k = len(points)
    coeffs = [Fraction(0)] * k
    for i, (xi, yi) in enumerate(zip(points, values)):
        # Lagrange basis polynomial for xi, expanded incrementally
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            denom *= xi - xj
            new = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                new[d] -= c * xj
                new[d + 1] += c
            basis = new
        scale = Fraction(yi) / denom
        for d, c in enumerate(basis):
            coeffs[d] += scale * c
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced a non-integer coefficient")
        out.append(int(c))
    while out and out[-1] == 0:
        out.pop()
    return out


def determinant(matrix: SeifertMatrix) -> int:
    """Knot determinant |Delta(-1)|; always odd, 1 for the unknot."""
    return abs(int(alexander(matrix)(-1)))


def arf(matrix: SeifertMatrix) -> int:
    """Arf invariant in {0, 1}: 0 exactly when Delta(-1) = +-1 mod 8."""
    d = int(alexander(matrix)(-1)) % 8
    return 0 if d in (1, 7) else 1


def connected_sum(a: SeifertMatrix, b: SeifertMatrix) -> SeifertMatrix:
    """Block sum; genus and all abelian invariants add along it."""
    na, nb = a.dim, b.dim
    rows = []
    for i in range(na):
        rows.append(list(a.entries[i]) + [0] * nb)
    for i in range(nb):
        rows.append([0] * na + list(b.entries[i]))
    return SeifertMatrix(rows)


def inverse(matrix: SeifertMatrix) -> SeifertMatrix:
    """Concordance inverse -S^T: same Delta, negated signatures."""
    n = matrix.dim
    return SeifertMatrix(
        [[-matrix.entries[j][i] for j in range(n)] for i in range(n)]
    )


def ordinary_signature(matrix: SeifertMatrix) -> int:
    """Signature of the symmetrized matrix S + S^T."""
    rows = [[Fraction(v) for v in row] for row in matrix.symmetrized()]
    return symmetric_signature(rows)


def infection_alexander(
    base: LaurentPolynomial, insert: LaurentPolynomial, winding: int
) -> LaurentPolynomial:
    """Alexander polynomial after infecting along a curve of the given
    winding number: base(t) * insert(t**winding), renormalized."""
    return (base * insert.substituted_power(winding)).normalized()
