import random
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest

from conftest import FIGURE8, SLICE_EXAMPLE, TREFOIL, TWIST1, random_seifert
from knotsig import (
    LaurentPolynomial,
    SeifertMatrix,
    alexander,
    circle_roots,
    connected_sum,
    hermitian_form,
    inverse,
    jump_angle_enclosures,
    rho,
    signature_at,
    signature_profile,
)
from knotsig.signatures import cosine_polynomial

mp.mp.dps = 40


def numpy_signature(rows, x: Fraction) -> int:
    """Independent oracle: eigenvalue signs of the complex form at x."""
    s = np.array(rows, dtype=float)
    xf = float(x)
    h = (1 - xf) * (s + s.T) + 1j * np.sqrt(max(0.0, 1 - xf * xf)) * (s - s.T)
    eig = np.linalg.eigvalsh(h)
    scale = max(1.0, float(np.abs(eig).max()))
    return int((eig > 1e-9 * scale).sum() - (eig < -1e-9 * scale).sum())


def test_hermitian_form_endpoints():
    m = SeifertMatrix(TREFOIL)
    at_one = hermitian_form(m, Fraction(1))
    assert all(
        re == 0 and im == 0 for row in at_one.entries for re, im in row
    )
    at_minus = hermitian_form(m, Fraction(-1))
    sym = m.symmetrized()
    for i in range(2):
        for j in range(2):
            re, im = at_minus.entries[i][j]
            assert re == 2 * sym[i][j]
            assert im == 0


def test_hermitian_form_trefoil_midpoint():
    # at x = 0 the form is [[-2, 1+i], [1-i, -2]]  (y = sqrt(1) folds to 1)
    form = hermitian_form(SeifertMatrix(TREFOIL), Fraction(0))
    re01, im01 = form.entries[0][1]
    assert re01 == 1 and im01 == 1
    re10, im10 = form.entries[1][0]
    assert re10 == 1 and im10 == -1
    assert form.entries[0][0][0] == -2 and form.entries[0][0][1] == 0
    lower = hermitian_form(SeifertMatrix(TREFOIL), Fraction(0), upper=False)
    assert lower.entries[0][1][1] == -1
    # at x = 1/2 the off-diagonal imaginary part keeps sqrt(3/4) unfolded
    half = hermitian_form(SeifertMatrix(TREFOIL), Fraction(1, 2))
    im = half.entries[0][1][1]
    assert im.a == 0 and im.b == 1 and im.d == Fraction(3, 4)


def test_signature_at_examples():
    trefoil = SeifertMatrix(TREFOIL)
    assert signature_at(trefoil, Fraction(1)) == 0
    assert signature_at(trefoil, Fraction(-1)) == -2
    assert signature_at(trefoil, Fraction(0)) == -2
    assert signature_at(trefoil, Fraction(3, 4)) == 0
    assert signature_at(trefoil, Fraction(1, 2)) == -1  # on the jump itself
    twist = SeifertMatrix(TWIST1)
    assert signature_at(twist, Fraction(-1)) == 2
    assert signature_at(twist, Fraction(1, 2)) == 2  # below the jump at 3/4
    assert signature_at(twist, Fraction(7, 8)) == 0
    with pytest.raises(ValueError):
        signature_at(trefoil, Fraction(3, 2))


def test_signature_at_matches_numpy():
    rng = random.Random(31)
    for _ in range(60):
        matrix = random_seifert(rng, rng.choice((1, 2)))
        x = Fraction(rng.randint(-127, 127), 128)
        assert signature_at(matrix, x) == numpy_signature(matrix.rows(), x)


def test_signature_at_block_additive():
    rng = random.Random(37)
    for _ in range(30):
        a = random_seifert(rng, 1)
        b = random_seifert(rng, rng.choice((1, 2)))
        x = Fraction(rng.randint(-9, 9), 10)
        assert signature_at(connected_sum(a, b), x) == signature_at(a, x) + signature_at(b, x)


def test_cosine_polynomial():
    delta = alexander(SeifertMatrix(TREFOIL))
    assert cosine_polynomial(delta) == (-1, 2)
    delta_twist = alexander(SeifertMatrix(TWIST1))
    assert cosine_polynomial(delta_twist) == (-3, 4)
    assert cosine_polynomial(LaurentPolynomial({0: 1})) == (1,)
    # t^-2 + t^2 rewrites through 2*T_2 = 4x^2 - 2
    assert cosine_polynomial(LaurentPolynomial({-2: 1, 0: 0, 2: 1})) == (-2, 0, 4)
    with pytest.raises(ValueError):
        cosine_polynomial(LaurentPolynomial({0: 1, 1: 1}))


def test_circle_roots_examples():
    assert [a.value for a in circle_roots(alexander(SeifertMatrix(TREFOIL)))] == [
        Fraction(1, 2)
    ]
    assert [a.value for a in circle_roots(alexander(SeifertMatrix(TWIST1)))] == [
        Fraction(3, 4)
    ]
    assert circle_roots(alexander(SeifertMatrix(FIGURE8))) == []
    assert circle_roots(LaurentPolynomial({0: 1})) == []


def test_circle_roots_match_numpy_roots():
    rng = random.Random(41)
    checked = 0
    for _ in range(40):
        matrix = random_seifert(rng, 2)
        delta = alexander(matrix)
        p = cosine_polynomial(delta)
        if len(p) <= 1:
            continue
        expected = [
            r.real
            for r in np.roots(list(reversed(p)))
            if abs(r.imag) < 1e-9 and -1 < r.real < 1
        ]
        got = circle_roots(delta)
        assert len(got) == len(set(np.round(expected, 9)))
        for a, r in zip(got, sorted(set(np.round(expected, 9)))):
            lo, hi = a.bounds()
            assert float(lo) - 1e-8 <= r <= float(hi) + 1e-8
        checked += 1
    assert checked >= 10


def test_profile_examples():
    p = signature_profile(SeifertMatrix(TREFOIL))
    assert [a.value for a in p.jumps] == [Fraction(1, 2)]
    assert p.arc_values == (0, -2)
    assert p.endpoint_value == -2

    p = signature_profile(SeifertMatrix(TWIST1))
    assert [a.value for a in p.jumps] == [Fraction(3, 4)]
    assert p.arc_values == (0, 2)
    assert p.endpoint_value == 2

    p = signature_profile(SeifertMatrix(FIGURE8))
    assert p.jumps == ()
    assert p.arc_values == (0,)
    assert p.endpoint_value == 0

    p = signature_profile(SeifertMatrix([]))
    assert p.jumps == () and p.arc_values == (0,) and p.endpoint_value == 0


def test_profile_drops_non_jumps():
    # granny knot: trefoil # trefoil doubles the jump; its inverse cancels
    trefoil = SeifertMatrix(TREFOIL)
    granny = connected_sum(trefoil, trefoil)
    p = signature_profile(granny)
    assert [a.value for a in p.jumps] == [Fraction(1, 2)]
    assert p.arc_values == (0, -4)

    square = connected_sum(trefoil, inverse(trefoil))
    p = signature_profile(square)
    assert p.jumps == ()
    assert p.arc_values == (0,)
    assert p.endpoint_value == 0


def test_profile_first_arc_zero_random():
    rng = random.Random(43)
    for _ in range(40):
        p = signature_profile(random_seifert(rng, rng.choice((1, 2))))
        assert p.arc_values[0] == 0
        assert p.endpoint_value == p.arc_values[-1]
        for a, b in zip(p.arc_values, p.arc_values[1:]):
            assert a != b
            assert (a - b) % 2 == 0


def test_jump_angle_enclosures():
    p = signature_profile(SeifertMatrix(TREFOIL))
    (lo, hi), = jump_angle_enclosures(p, bits=48)
    assert lo <= Fraction(1, 3) <= hi
    assert hi - lo < Fraction(1, 1 << 40)


def test_rho_trefoil_encloses_known_value():
    r = rho(SeifertMatrix(TREFOIL), Fraction(1, 10**9))
    assert r.width() <= Fraction(1, 10**9)
    assert r.contains(Fraction(-4, 3))
    assert r.symbolic() == "-2(pi-arccos(1/2))/pi"
    assert r.excludes_zero()


def test_rho_unknot_exact_zero():
    r = rho(SeifertMatrix([]))
    assert r.lo == 0 and r.hi == 0
    assert r.is_exactly_zero()
    assert r.symbolic() == "0"
    assert not r.excludes_zero()


def test_rho_tolerance_contract():
    matrix = SeifertMatrix(TWIST1)
    for tol in (Fraction(1, 100), Fraction(1, 10**6), Fraction(1, 10**12)):
        r = rho(matrix, tol)
        assert r.width() <= tol
    with pytest.raises(ValueError):
        rho(matrix, Fraction(0))


def test_rho_matches_mpmath_formula():
    for m in (1, 2, 3, 7):
        matrix = SeifertMatrix([[1, 0], [1, 2 * m]])
        r = rho(matrix, Fraction(1, 10**10))
        expected = 2 * (mp.pi - mp.acos(mp.mpf(4 * m - 1) / (4 * m))) / mp.pi
        oracle = Fraction(mp.nstr(expected, 30))
        assert r.lo - Fraction(1, 10**20) <= oracle <= r.hi + Fraction(1, 10**20)


def test_rho_slice_family_exact_zero():
    for n in (1, 2, 3):
        r = rho(SeifertMatrix([[0, 1], [0, n]]))
        assert r.is_exactly_zero()
        assert r.lo == 0 and r.hi == 0


def test_rho_irrational_jump_against_quadrature():
    # two irrational jumps at the roots of 8x^2 - 7 = 0
    matrix = SeifertMatrix(
        [[-1, 0, 2, 1], [-1, -2, -1, 0], [2, -1, 0, 1], [1, 1, 0, 0]]
    )
    r = rho(matrix, Fraction(1, 10**8))
    # rebuild the sum from the profile through mpmath instead of trusting
    # any sign bookkeeping done by hand
    p = signature_profile(matrix)
    total = mp.mpf(0)
    for c, a in zip(p.jump_sizes(), p.theta_ordered_jumps()):
        lo, hi = a.refined(Fraction(1, 1 << 40)).bounds()
        theta = mp.acos((mp.mpf(lo.numerator) / lo.denominator + mp.mpf(hi.numerator) / hi.denominator) / 2)
        total += c * (mp.pi - theta) / mp.pi
    oracle = Fraction(mp.nstr(total, 25))
    assert r.lo - Fraction(1, 10**7) <= oracle <= r.hi + Fraction(1, 10**7)
