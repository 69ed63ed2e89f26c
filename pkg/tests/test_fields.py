import random
from fractions import Fraction

import pytest

from knotsig import (
    MismatchedField,
    MultiQuadElement,
    QuadReal,
    ZeroInput,
    quad_sign,
    square_class_rank,
    symmetric_signature,
)


def test_quadreal_basic_arithmetic():
    d = Fraction(2)
    x = QuadReal(d, 1, 1)  # 1 + sqrt(2)
    y = QuadReal(d, 0, 1)  # sqrt(2)
    assert x + y == QuadReal(d, 1, 2)
    assert x - y == QuadReal(d, 1, 0)
    assert x * y == QuadReal(d, 2, 1)
    assert y * y == QuadReal(d, 2, 0)
    assert (x / y) * y == x
    assert -x == QuadReal(d, -1, -1)
    assert bool(QuadReal(d, 0, 0)) is False


def test_quadreal_sign():
    assert quad_sign(QuadReal(2, 1, -1)) == -1  # 1 - sqrt(2) < 0
    assert quad_sign(QuadReal(2, 2, -1)) == 1   # 2 - sqrt(2) > 0
    assert quad_sign(QuadReal(2, -1, 1)) == 1   # sqrt(2) - 1 > 0
    assert quad_sign(QuadReal(2, -2, 1)) == -1
    assert quad_sign(QuadReal(2, 0, 0)) == 0
    assert quad_sign(QuadReal(2, 0, -3)) == -1
    assert quad_sign(QuadReal(Fraction(3, 4), 7, 0)) == 1


def test_quadreal_square_discriminant_folds():
    # 1 - x^2 can be a rational square at sampled abscissas, e.g. x = 3/5
    q = QuadReal(Fraction(16, 25), 1, 1)
    assert q.b == 0
    assert q.a == Fraction(9, 5)
    assert QuadReal(0, 2, 5) == QuadReal(0, 2, 0)
    assert quad_sign(QuadReal(Fraction(16, 25), -1, 1)) == -1  # -1 + 4/5


def test_quadreal_mismatched_context():
    with pytest.raises(MismatchedField):
        QuadReal(2, 1, 1) + QuadReal(3, 1, 1)


def test_quadreal_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QuadReal(2, 1, 1) / QuadReal(2, 0, 0)


def test_quadreal_random_field_axioms():
    rng = random.Random(3)
    d = Fraction(5)
    for _ in range(50):
        a = QuadReal(d, rng.randint(-5, 5), rng.randint(-5, 5))
        b = QuadReal(d, rng.randint(-5, 5), rng.randint(-5, 5))
        c = QuadReal(d, rng.randint(-5, 5), rng.randint(-5, 5))
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if bool(b):
            assert (a / b) * b == a
        # sign is multiplicative
        assert quad_sign(a * b) == quad_sign(a) * quad_sign(b)


def test_symmetric_signature_small_cases():
    assert symmetric_signature([]) == 0
    assert symmetric_signature([[Fraction(2)]]) == 1
    assert symmetric_signature([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]) == 0
    assert symmetric_signature(
        [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(2)]]
    ) == 2
    # degenerate: rank 1 positive
    assert symmetric_signature(
        [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]]
    ) == 1


def test_symmetric_signature_matches_numpy():
    import numpy as np

    rng = random.Random(7)
    for _ in range(50):
        n = rng.choice((2, 3, 4, 5))
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = rng.randint(-4, 4)
        eig = np.linalg.eigvalsh(np.array(m, dtype=float))
        expected = int((eig > 1e-9).sum() - (eig < -1e-9).sum())
        rows = [[Fraction(v) for v in row] for row in m]
        assert symmetric_signature(rows) == expected


def test_multiquad_construction_and_generators():
    primes = (5, 13)
    one = MultiQuadElement.one(primes)
    xi0 = MultiQuadElement.generator(primes, 0)
    xi1 = MultiQuadElement.generator(primes, 1)
    assert xi0 * xi0 == MultiQuadElement.from_rational(primes, -15)
    assert xi1 * xi1 == MultiQuadElement.from_rational(primes, -143)
    assert xi0 * xi1 == xi1 * xi0
    assert one * xi0 == xi0
    prod = xi0 * xi1
    assert prod * prod == MultiQuadElement.from_rational(primes, 15 * 143)


def test_multiquad_validation():
    with pytest.raises(ValueError):
        MultiQuadElement((4, 5), [0] * 4)
    with pytest.raises(ValueError):
        MultiQuadElement((13, 5), [0] * 4)
    with pytest.raises(ValueError):
        MultiQuadElement((5, 5), [0] * 4)
    with pytest.raises(ValueError):
        MultiQuadElement((5,), [0] * 3)
    with pytest.raises(MismatchedField):
        MultiQuadElement.one((5,)) * MultiQuadElement.one((13,))


def test_multiquad_conjugation_and_reality():
    primes = (5, 13)
    xi0 = MultiQuadElement.generator(primes, 0)
    xi1 = MultiQuadElement.generator(primes, 1)
    z = Fraction(1, 2) + Fraction(1, 3) * xi0
    assert z.conjugate() == Fraction(1, 2) - Fraction(1, 3) * xi0
    assert not z.is_real()
    assert (z * z.conjugate()).is_real()
    assert (xi0 * xi1).is_real()  # even degree is fixed by conjugation
    assert (xi0 * xi1).conjugate() == xi0 * xi1
    assert MultiQuadElement.from_rational(primes, 7).is_real()


def test_multiquad_power():
    primes = (5,)
    xi = MultiQuadElement.generator(primes, 0)
    z = Fraction(7, 8) + Fraction(1, 8) * xi
    assert z**0 == MultiQuadElement.one(primes)
    assert z**1 == z
    assert z**3 == z * z * z
    assert z**6 == (z * z * z) * (z * z * z)
    with pytest.raises(ValueError):
        z**-1


def test_multiquad_random_ring_axioms():
    rng = random.Random(11)
    primes = (5, 13, 17)
    size = 1 << len(primes)

    def rand_elt():
        return MultiQuadElement(
            primes, [Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(size)]
        )

    for _ in range(25):
        a, b, c = rand_elt(), rand_elt(), rand_elt()
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()


def test_square_class_rank_examples():
    assert square_class_rank([-15]) == 1
    assert square_class_rank([-15, -143]) == 2
    assert square_class_rank([-15, -255]) == 2
    assert square_class_rank([-15, -143, -255]) == 3
    assert square_class_rank([-15, -15]) == 1
    assert square_class_rank([-15, -60]) == 1  # -60 = -15 * 4
    assert square_class_rank([4]) == 0  # a square is the trivial class
    assert square_class_rank([2, 3, 6]) == 2
    with pytest.raises(ZeroInput):
        square_class_rank([15, 0])
