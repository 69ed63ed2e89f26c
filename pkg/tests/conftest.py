import random

from knotsig import SeifertMatrix

TREFOIL = [[-1, 1], [0, -1]]
FIGURE8 = [[1, 1], [0, -1]]
TWIST1 = [[1, 0], [1, 2]]
SLICE_EXAMPLE = [[1, 1], [0, -2]]


def random_seifert(rng: random.Random, genus: int, bound: int = 2, conj: int = 2) -> SeifertMatrix:
    """Random valid Seifert matrix: symmetric noise plus the standard
    symplectic skew part, then a few unimodular congruence moves."""
    n = 2 * genus
    skew = [[0] * n for _ in range(n)]
    for b in range(genus):
        skew[2 * b][2 * b + 1] = 1
        skew[2 * b + 1][2 * b] = -1
    sym = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            sym[i][j] = sym[j][i] = rng.randint(-bound, bound)
    rows = [
        [sym[i][j] + (skew[i][j] if i < j else 0) for j in range(n)]
        for i in range(n)
    ]
    for _ in range(conj):
        i, j = rng.sample(range(n), 2)
        e = rng.choice((-1, 1))
        for k in range(n):
            rows[j][k] += e * rows[i][k]
        for k in range(n):
            rows[k][j] += e * rows[k][i]
    return SeifertMatrix(rows)
