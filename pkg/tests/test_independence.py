from fractions import Fraction

import pytest

from knotsig import (
    FamilyParams,
    FieldMismatch,
    LengthMismatch,
    MultiQuadElement,
    UnitAlgebraic,
    exhaustive_independence,
    galois_degree_check,
    infection_rho_contribution,
    is_real_product,
    obstruction_ledger,
    params_from_primes,
    power_product,
    root_of_unity_check,
    unit_z,
)

PARAMS3 = params_from_primes(3)
PRIMES3 = tuple(p.prime for p in PARAMS3)


def test_unit_z_construction():
    z = unit_z(PARAMS3[0], PRIMES3)
    assert z.prime == 5 and z.m == 2
    v = z.value
    assert v.rational_part() == Fraction(7, 8)
    # unit norm: z * conj(z) == 1
    assert (v * v.conjugate()) == MultiQuadElement.one(PRIMES3)


def test_unit_z_field_mismatch():
    with pytest.raises(FieldMismatch):
        unit_z(PARAMS3[0], (13, 17))


def test_unit_powers():
    z = unit_z(PARAMS3[1], PRIMES3)
    assert z.power(0) == MultiQuadElement.one(PRIMES3)
    assert z.power(1) == z.value
    assert z.power(2) == z.value * z.value
    # negative powers go through the conjugate since |z| = 1
    assert z.power(-1) == z.value.conjugate()
    assert z.power(3) * z.power(-3) == MultiQuadElement.one(PRIMES3)


def test_power_product_basics():
    units = [unit_z(p, PRIMES3) for p in PARAMS3]
    one = MultiQuadElement.one(PRIMES3)
    assert power_product(units, (0, 0, 0)) == one
    w = power_product(units, (1, 2, -1))
    expected = units[0].power(1) * units[1].power(2) * units[2].power(-1)
    assert w == expected
    with pytest.raises(LengthMismatch):
        power_product(units, (1, 2))
    with pytest.raises(ValueError):
        power_product([], ())


def test_is_real_product():
    units = [unit_z(p, PRIMES3) for p in PARAMS3]
    assert is_real_product(units, (0, 0, 0))
    assert not is_real_product(units, (1, 0, 0))
    assert not is_real_product(units, (0, 2, 0))
    assert not is_real_product(units, (1, -1, 2))
    # duplicate the same unit: exponents (1, -1) multiply to 1, which is real
    dup = [units[0], units[0]]
    assert is_real_product(dup, (1, -1))
    assert is_real_product(dup, (2, -2))
    assert not is_real_product(dup, (1, 1))


def test_galois_degree_check():
    assert galois_degree_check(PARAMS3)
    assert galois_degree_check(params_from_primes(6))
    # a repeated prime collapses the square classes and must be rejected
    repeated = (
        FamilyParams(1, 5, 2, Fraction(7, 8)),
        FamilyParams(2, 5, 2, Fraction(7, 8)),
    )
    assert not galois_degree_check(repeated)


def test_root_of_unity_check():
    for p in PARAMS3:
        assert root_of_unity_check(unit_z(p, PRIMES3))


def test_exhaustive_independence_small():
    assert exhaustive_independence(PARAMS3, 2) == []
    assert exhaustive_independence(params_from_primes(2), 3) == []
    assert exhaustive_independence(PARAMS3, 0) == []


def test_exhaustive_independence_detects_dependence():
    # same prime twice: z * z^-1 = 1 is a genuine multiplicative relation
    repeated = (
        FamilyParams(1, 5, 2, Fraction(7, 8)),
        FamilyParams(2, 5, 2, Fraction(7, 8)),
    )
    violations = exhaustive_independence(repeated, 1)
    assert (1, -1) in violations or (-1, 1) in violations


def test_obstruction_ledger_accepts_small_coefficients():
    for coeffs in ((0, 0, 0), (1, 0, 0), (2, 1, 0), (5, 5, 5)):
        assert obstruction_ledger(PARAMS3, coeffs)


def test_obstruction_ledger_validation():
    with pytest.raises(LengthMismatch):
        obstruction_ledger(PARAMS3, (1, 2))
    with pytest.raises(ValueError):
        obstruction_ledger(PARAMS3, (1, -1, 0))


def test_infection_rho_contribution():
    from knotsig import rho, twist_seifert

    companion = rho(twist_seifert(2), Fraction(1, 10**6))
    kept = infection_rho_contribution(companion, winding_nontrivial=True)
    assert kept is companion
    dropped = infection_rho_contribution(companion, winding_nontrivial=False)
    assert dropped.is_exactly_zero()
