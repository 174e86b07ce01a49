"""Shared generators and fixed matrices for the test suite.

Everything takes an explicit random.Random so corpora are reproducible;
hypothesis-based tests build their own strategies instead.
"""

from __future__ import annotations

import random
from fractions import Fraction

from minorsum.matrices import HermitianMatrix, conj_transpose, mat_mul
from minorsum.scalars import GaussianRational, gaussian


def random_fraction(rng: random.Random, bound: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.choice((1, 1, 2, 3)))


def random_gaussian(rng: random.Random, bound: int = 4, real_only: bool = False):
    re = random_fraction(rng, bound)
    if real_only or rng.random() < 0.5:
        return gaussian(re)
    return GaussianRational(re, random_fraction(rng, bound))


def random_hermitian(
    rng: random.Random, n: int, bound: int = 3, real_only: bool = False
) -> HermitianMatrix:
    rows = [[gaussian(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = gaussian(random_fraction(rng, bound))
        for j in range(i + 1, n):
            entry = random_gaussian(rng, bound, real_only)
            rows[i][j] = entry
            rows[j][i] = entry.conjugate()
    return HermitianMatrix(rows)


def random_rectangular(rng: random.Random, rows: int, cols: int, bound: int = 2):
    return [
        [random_gaussian(rng, bound) for _ in range(cols)] for _ in range(rows)
    ]


def random_psd_product(rng: random.Random, n: int, factor_rows: int) -> HermitianMatrix:
    """A = B*B for a random factor_rows x n matrix B; PSD with rank <= factor_rows."""
    b = random_rectangular(rng, factor_rows, n)
    return HermitianMatrix(mat_mul(conj_transpose(b), b))


def random_signature_hermitian(
    rng: random.Random, n: int, positives: int, negatives: int
) -> HermitianMatrix:
    """Sum of positives rank-one terms v v* minus negatives such terms.

    Inertia is entrywise at most (positives, negatives); random vectors
    almost always realize it exactly, and tests compare against the
    oracle rather than assuming so.
    """
    rows = [[gaussian(0)] * n for _ in range(n)]
    for sign in [1] * positives + [-1] * negatives:
        vec = [random_gaussian(rng, 2) for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rows[i][j] = rows[i][j] + vec[i] * vec[j].conjugate() * sign
    return HermitianMatrix(rows)


def random_skew_hermitian(rng: random.Random, n: int, bound: int = 2):
    """S with S* = -S, the input a Cayley transform expects."""
    rows = [[gaussian(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = GaussianRational(0, random_fraction(rng, bound))
        for j in range(i + 1, n):
            entry = random_gaussian(rng, bound)
            rows[i][j] = entry
            rows[j][i] = -entry.conjugate()
    return rows


def random_permutation_grid(rng: random.Random, n: int):
    perm = list(range(n))
    rng.shuffle(perm)
    return [
        [gaussian(1) if perm[i] == j else gaussian(0) for j in range(n)]
        for i in range(n)
    ]


def compositions(n: int) -> list[tuple[int, ...]]:
    """All ordered tuples of positive integers summing to n."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


def hankel_matrix(n: int) -> HermitianMatrix:
    return HermitianMatrix(
        [[Fraction(i + j - 1) for j in range(1, n + 1)] for i in range(1, n + 1)]
    )


def hilbert_matrix(n: int) -> HermitianMatrix:
    return HermitianMatrix(
        [[Fraction(1, i + j - 1) for j in range(1, n + 1)] for i in range(1, n + 1)]
    )
