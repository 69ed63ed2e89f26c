"""Slice obstruction bookkeeping for genus-1 Seifert matrices.

A genus-1 matrix S carries the integral quadratic self-linking form

    q(x, y) = S11*x**2 + (S12 + S21)*x*y + S22*y**2,

whose middle coefficient is always odd, so q is never identically zero.
S is algebraically slice exactly when q has a nontrivial rational zero,
i.e. when the discriminant (S12 + S21)**2 - 4*S11*S22 is a perfect square;
in that case the primitive zeros up to sign, the metabolizer classes,
number one or two.

When the Alexander polynomial is nontrivial, a slice disc would force the
signature integral of a companion knot tied to one of those classes to
vanish.  ``obstruction_report`` takes a user-supplied companion knot per
class, encloses each integral, and reports OBSTRUCTED exactly when every
enclosure excludes zero.  An enclosure that straddles zero only ever
weakens the verdict, never the other way around.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .seifert import LaurentPolynomial, SeifertMatrix, alexander
from .signatures import RhoValue, rho


class WrongGenus(ValueError):
    """Raised when a matrix is not 2 x 2."""


class NotAlgebraicallySlice(ValueError):
    """Raised when the self-linking form has no nontrivial rational zero."""


class AlexanderTrivial(ValueError):
    """Raised when Delta = 1 and the obstruction machinery does not apply."""


class MissingAssignment(ValueError):
    """Raised when a metabolizer class has no companion knot assigned."""


@dataclass(frozen=True)
class MetabolizerClass:
    """A primitive isotropic vector up to sign, first nonzero entry > 0."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if math.gcd(self.x, self.y) != 1:
            raise ValueError("class vector must be primitive")
        first = self.x if self.x else self.y
        if first <= 0:
            raise ValueError("class vector must have positive leading entry")

    @classmethod
    def canonical(cls, x: int, y: int) -> "MetabolizerClass":
        g = math.gcd(x, y)
        if g == 0:
            raise ValueError("class vector must be nonzero")
        x, y = x // g, y // g
        first = x if x else y
        if first < 0:
            x, y = -x, -y
        return cls(x, y)

    def as_tuple(self) -> tuple[int, int]:
        return (self.x, self.y)


def _require_genus_one(matrix: SeifertMatrix) -> None:
    if matrix.genus != 1:
        raise WrongGenus(f"need a 2x2 Seifert matrix, got size {matrix.dim}")


def self_linking(matrix: SeifertMatrix, vector: tuple[int, int]) -> int:
    """q(x, y) for the given integer vector."""
    _require_genus_one(matrix)
    x, y = vector
    a = matrix[0, 0]
    b = matrix[0, 1] + matrix[1, 0]
    c = matrix[1, 1]
    return a * x * x + b * x * y + c * y * y


def _discriminant_root(matrix: SeifertMatrix) -> int | None:
    a = matrix[0, 0]
    b = matrix[0, 1] + matrix[1, 0]
    c = matrix[1, 1]
    disc = b * b - 4 * a * c
    if disc < 0:
        return None
    s = math.isqrt(disc)
    return s if s * s == disc else None


def is_algebraically_slice_g1(matrix: SeifertMatrix) -> bool:
    """True iff the self-linking form has a nontrivial rational zero."""
    _require_genus_one(matrix)
    return _discriminant_root(matrix) is not None


def metabolizer_classes(matrix: SeifertMatrix) -> tuple[MetabolizerClass, ...]:
    """The primitive zero classes of the self-linking form.

    One class for a square form, two for a product of distinct lines;
    raises NotAlgebraicallySlice when no rational zero exists.
    """
    _require_genus_one(matrix)
    s = _discriminant_root(matrix)
    if s is None:
        raise NotAlgebraicallySlice("self-linking form has no rational zero")
    a = matrix[0, 0]
    b = matrix[0, 1] + matrix[1, 0]
    c = matrix[1, 1]
    classes: list[MetabolizerClass] = []
    if a == 0:
        # q = y * (b x + c y); b is odd, never zero
        classes.append(MetabolizerClass.canonical(1, 0))
        classes.append(MetabolizerClass.canonical(c, -b))
    else:
        for root_num in (-b + s, -b - s):
            ratio = Fraction(root_num, 2 * a)
            classes.append(
                MetabolizerClass.canonical(ratio.numerator, ratio.denominator)
            )
    unique: list[MetabolizerClass] = []
    for cls in classes:
        if cls not in unique:
            unique.append(cls)
    unique.sort(key=lambda cls: cls.as_tuple())
    return tuple(unique)


@dataclass(frozen=True)
class ObstructionReport:
    """Per-class signature integrals and the resulting verdict."""

    matrix: SeifertMatrix
    delta: LaurentPolynomial
    entries: tuple[tuple[MetabolizerClass, RhoValue], ...]
    obstructed: bool

    @property
    def verdict(self) -> str:
        return "OBSTRUCTED" if self.obstructed else "UNOBSTRUCTED"


def obstruction_report(
    matrix: SeifertMatrix,
    assignments: Mapping[MetabolizerClass | tuple[int, int], SeifertMatrix],
    tol: Fraction = Fraction(1, 10**6),
) -> ObstructionReport:
    """Evaluate the slice obstruction for an algebraically slice matrix.

    ``assignments`` maps each metabolizer class (or its tuple form, taken
    up to sign and scale) to the Seifert matrix of a companion knot; the
    verdict is OBSTRUCTED exactly when every class has an enclosure
    excluding zero.
    """
    classes = metabolizer_classes(matrix)
    delta = alexander(matrix)
    if delta == LaurentPolynomial.one():
        raise AlexanderTrivial("obstruction needs a nontrivial Alexander polynomial")
    normalized: dict[MetabolizerClass, SeifertMatrix] = {}
    for key, companion in assignments.items():
        if isinstance(key, MetabolizerClass):
            normalized[key] = companion
        else:
            normalized[MetabolizerClass.canonical(*key)] = companion
    entries = []
    for cls in classes:
        if cls not in normalized:
            raise MissingAssignment(f"no companion assigned to class {cls.as_tuple()}")
        entries.append((cls, rho(normalized[cls], tol)))
    obstructed = all(value.excludes_zero() for _, value in entries)
    return ObstructionReport(
        matrix=matrix, delta=delta, entries=tuple(entries), obstructed=obstructed
    )
