"""Exact certificates of rational independence for family jump angles.

The jump angle theta_j of the family member attached to the prime p_j has

    exp(i theta_j) = ((4m_j - 1) + xi_j) / (4m_j),  xi_j**2 = -p_j*(p_j-2),

an algebraic number of modulus exactly one inside the multiquadratic field
Q(xi_1, ..., xi_n).  A rational dependence among the angles (and pi) would
force some nontrivial power product of these units to be real; conversely,
checking that every candidate power product has a nonzero imaginary part is
a finite, exact refutation.  The field has full degree 2**n over Q as soon
as the integers -p_j*(p_j - 2) are independent square classes, which
``galois_degree_check`` verifies by integer factorization alone.

Everything here is exact rational arithmetic; there is no tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from .family import FamilyParams
from .fields import MultiQuadElement, square_class_rank
from .signatures import RhoValue


class FieldMismatch(ValueError):
    """Raised when a unit is requested in a field missing its prime."""


class LengthMismatch(ValueError):
    """Raised when exponent vectors and unit lists disagree in length."""


class UnitAlgebraic:
    """A modulus-one element exp(i theta_j) of the multiquadratic field."""

    __slots__ = ("prime", "m", "value")

    def __init__(self, params: FamilyParams, field_primes: Sequence[int]) -> None:
        field_primes = tuple(field_primes)
        if params.prime not in field_primes:
            raise FieldMismatch(
                f"prime {params.prime} is not a generator of {field_primes}"
            )
        j = field_primes.index(params.prime)
        m = params.m
        coords = [Fraction(0)] * (1 << len(field_primes))
        coords[0] = Fraction(4 * m - 1, 4 * m)
        coords[1 << j] = Fraction(1, 4 * m)
        value = MultiQuadElement(field_primes, coords)
        norm = value * value.conjugate()
        if norm != MultiQuadElement.one(field_primes):
            raise ArithmeticError("unit norm invariant failed")
        object.__setattr__(self, "prime", params.prime)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("UnitAlgebraic is immutable")

    def power(self, k: int) -> MultiQuadElement:
        """value**k for any integer k; negative powers via conjugation."""
        if k >= 0:
            return self.value**k
        return self.value.conjugate() ** (-k)


def unit_z(params: FamilyParams, field_primes: Sequence[int]) -> UnitAlgebraic:
    """The unit exp(i theta) of one family member inside the given field."""
    return UnitAlgebraic(params, field_primes)


def power_product(
    units: Sequence[UnitAlgebraic], exponents: Sequence[int]
) -> MultiQuadElement:
    """prod(z_j ** c_j) computed exactly in the common field."""
    if len(units) != len(exponents):
        raise LengthMismatch(
            f"{len(units)} units but {len(exponents)} exponents"
        )
    if not units:
        raise ValueError("need at least one unit")
    result = MultiQuadElement.one(units[0].value.primes)
    for u, c in zip(units, exponents):
        if c:
            result = result * u.power(c)
    return result


def is_real_product(
    units: Sequence[UnitAlgebraic], exponents: Sequence[int]
) -> bool:
    """True iff prod(z_j ** c_j) is fixed by complex conjugation."""
    return power_product(units, exponents).is_real()


def galois_degree_check(params: Sequence[FamilyParams]) -> bool:
    """True iff Q(xi_1, ..., xi_n) has the full degree 2**n.

    Equivalent to the integers -p_j*(p_j - 2) being independent in
    Q*/Q*^2, which is a finite factorization computation.
    """
    values = [-p.prime * (p.prime - 2) for p in params]
    return square_class_rank(values) == len(values)


def root_of_unity_check(unit: UnitAlgebraic) -> bool:
    """True iff the unit is not a 3rd, 4th, or 6th root of unity.

    A root of unity in a quadratic field has order 1, 2, 3, 4, or 6, and
    orders 1 and 2 are the real values +-1, which a unit with nonzero
    imaginary part cannot be.  Passing this check therefore certifies that
    the unit is not a root of unity at all, i.e. its angle is not a
    rational multiple of pi of any order a quadratic unit could realize.
    """
    one = MultiQuadElement.one(unit.value.primes)
    cube = unit.value**3
    if cube == one or cube == -one:
        return False
    if unit.value**4 == one:
        return False
    if unit.value**6 == one:
        return False
    return True


def exhaustive_independence(
    params: Sequence[FamilyParams], bound: int
) -> list[tuple[int, ...]]:
    """All nonzero exponent vectors with |c_j| <= bound whose power product
    is real; an empty list certifies independence up to that height.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    field_primes = tuple(sorted({p.prime for p in params}))
    units = [UnitAlgebraic(p, field_primes) for p in params]
    # precomputed power tables keep the search at one multiply per axis
    tables = [
        {c: u.power(c) for c in range(-bound, bound + 1)} for u in units
    ]
    violations: list[tuple[int, ...]] = []
    for combo in product(range(-bound, bound + 1), repeat=len(units)):
        if all(c == 0 for c in combo):
            continue
        acc = tables[0][combo[0]]
        for j in range(1, len(units)):
            acc = acc * tables[j][combo[j]]
        if acc.is_real():
            violations.append(combo)
    return violations


def infection_rho_contribution(
    companion: RhoValue, winding_nontrivial: bool
) -> RhoValue:
    """Contribution of one infection companion to the signature integral:
    the companion's full integral when the infection curve is detected by
    the character, zero otherwise."""
    if winding_nontrivial:
        return companion
    return RhoValue(terms=(), lo=Fraction(0), hi=Fraction(0))


def obstruction_ledger(
    params: Sequence[FamilyParams], coefficients: Sequence[int]
) -> bool:
    """Certify that rho(first member) + sum(c_j * rho(member_j)) != 0.

    The combination vanishes only if the power product with exponents
    (1 + c_1, c_2, ..., c_n) is real; returning True means that product has
    nonzero imaginary part, an exact refutation of the vanishing.
    """
    if len(coefficients) != len(params):
        raise LengthMismatch(
            f"{len(params)} parameters but {len(coefficients)} coefficients"
        )
    if any(c < 0 for c in coefficients):
        raise ValueError("coefficients must be nonnegative")
    field_primes = tuple(sorted({p.prime for p in params}))
    units = [UnitAlgebraic(p, field_primes) for p in params]
    exponents = [coefficients[0] + 1] + [c for c in coefficients[1:]]
    return not is_real_product(units, exponents)
