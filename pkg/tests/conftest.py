"""Shared test helpers: seeded random matrices and unimodular transforms."""

import random

import pytest

from ringlat.linalg import determinant
from ringlat.matrix import IntMatrix


def random_nonsingular(rng, n, lo=-8, hi=8):
    """Random n x n integer matrix with nonzero determinant."""
    while True:
        m = IntMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])
        if determinant(m) != 0:
            return m


def random_unimodular(rng, n, steps=None):
    """Product of random elementary row operations applied to the identity."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if steps is None:
        steps = 4 * n
    for _ in range(steps):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        elif op == 1:
            rows[i] = [-e for e in rows[i]]
        elif i != j:
            q = rng.randint(-3, 3)
            rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
    return IntMatrix(rows)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
