#!/usr/bin/env python3
"""Worked example: partitioned minor sums on a rank-2 Hankel matrix.

Builds the 5x5 matrix a_ij = i+j-1, walks through the sigma sequence
for several block partitions, shows why one partition is rejected by
the inertia engine, and cross-checks the accepted answer against the
congruence-diagonalization oracle.

Run:  python3 scripts/block_sigma_demo.py
"""

from fractions import Fraction

from minorsum import (
    BlockPartition,
    HermitianMatrix,
    admissible,
    char_poly_from_delta,
    classify_definiteness,
    inertia_from_sigma,
    lagrange_inertia,
    rank_from_sigma,
    sigma_direct,
    sigma_index_sets,
)


def hankel(n: int) -> HermitianMatrix:
    return HermitianMatrix(
        [[Fraction(i + j - 1) for j in range(1, n + 1)] for i in range(1, n + 1)]
    )


def show_sigma(matrix: HermitianMatrix, sizes: tuple[int, ...]) -> None:
    partition = BlockPartition(sizes)
    values = sigma_direct(matrix, partition).values
    print(f"blocks {partition.text()}:")
    for l, value in enumerate(values, start=1):
        sets = sigma_index_sets(l, partition)
        shown = " + ".join("P{" + ",".join(map(str, s)) + "}" for s in sets)
        print(f"  sigma_{l} = {shown} = {value}")
    print(f"  admissible: {'yes' if admissible(matrix, partition) else 'no'}")
    print()


def main() -> None:
    matrix = hankel(5)
    print("A (5x5, a_ij = i+j-1):")
    print(matrix.to_text())

    for sizes in [(1, 1, 1, 1, 1), (2, 1, 2), (2, 3), (5,)]:
        show_sigma(matrix, sizes)

    print("inertia needs an admissible partition; (2,1,2) fails because")
    print("the leading 3x3 submatrix is singular, (2,3) works:")
    partition = BlockPartition((2, 3))
    inertia = inertia_from_sigma(matrix, partition)
    print(f"  inertia from sigma: p={inertia.p} q={inertia.q} z={inertia.z}")
    print(f"  rank from sigma:    {rank_from_sigma(matrix, partition)}")
    print(f"  definiteness:       {classify_definiteness(matrix, partition).describe()}")
    oracle = lagrange_inertia(matrix).inertia
    print(f"  oracle (congruence diagonalization): p={oracle.p} q={oracle.q} z={oracle.z}")
    assert oracle == inertia
    print()
    print(f"characteristic polynomial: {char_poly_from_delta(matrix).text()}")


if __name__ == "__main__":
    main()
