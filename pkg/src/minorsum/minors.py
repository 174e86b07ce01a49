"""Principal minor sums: full sums and block-partition sums.

For block sizes (k_1, .., k_t) with running totals K_0 = 0, .., K_t = n,
diagonal position l belongs to exactly one block k, the one with
K_{k-1} < l <= K_k.  The size-l index sets admitted at position l are
those that contain every index up to K_{k-1} and stay inside 1..K_k, so
there are C(k_k, l - K_{k-1}) of them.  Summing the corresponding
principal minors gives the l-th partitioned minor sum.

The two extreme partitions recover familiar objects: all blocks of size
one gives the leading principal minors, a single block gives the sums
over all size-l principal minors (the signed characteristic polynomial
coefficients).

Two independent routes compute the same sequence.  `sigma_direct` sums
minors straight from the definition and works for any matrix and
partition.  `sigma_schur` eliminates the leading blocks recursively and
rescales the full minor sums of the last Schur complement; it needs the
leading block submatrices to be invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InternalCheckError, SizeLimitError
from .matrices import BlockPartition, HermitianMatrix, schur_split

__all__ = [
    "DeltaSequence",
    "SigmaSequence",
    "principal_minor",
    "block_of_diagonal_index",
    "sigma_index_sets",
    "delta_sequence",
    "sigma_direct",
    "sigma_schur",
]

# Above this width the index-set families grow like C(width, width/2);
# exact arithmetic at that scale is not what this tool is for.
MAX_ENUM_WIDTH = 20


def _guard_width(width: int, what: str) -> None:
    if width > MAX_ENUM_WIDTH:
        raise SizeLimitError(
            f"{what} would enumerate binomial(width={width}) index sets; "
            f"the limit is width {MAX_ENUM_WIDTH}"
        )


@dataclass(frozen=True)
class DeltaSequence:
    """Sums over all size-l principal minors, l = 1..n (index 0 holds l=1)."""

    values: tuple[Fraction, ...]


@dataclass(frozen=True)
class SigmaSequence:
    """Partitioned minor sums together with the partition they follow."""

    values: tuple[Fraction, ...]
    partition: BlockPartition


def principal_minor(matrix: HermitianMatrix, indices) -> Fraction:
    """Determinant of the principal submatrix on a strictly increasing
    one-based index set.  The empty set gives 1."""
    return matrix.principal_minor(indices)


def block_of_diagonal_index(l: int, partition: BlockPartition) -> int:
    """The one-based block k whose diagonal range covers position l."""
    if not 1 <= l <= partition.n:
        raise ValueError(f"diagonal index {l} out of range 1..{partition.n}")
    prefixes = partition.prefixes
    for k in range(1, partition.t + 1):
        if l <= prefixes[k]:
            return k
    raise InternalCheckError("prefix scan failed to locate a diagonal index")


def sigma_index_sets(l: int, partition: BlockPartition) -> tuple[tuple[int, ...], ...]:
    """All size-l index sets admitted at diagonal position l, in
    lexicographic order.

    Each set is the full prefix 1..K_{k-1} plus l - K_{k-1} indices
    chosen inside block k.
    """
    k = block_of_diagonal_index(l, partition)
    lo = partition.prefixes[k - 1]
    hi = partition.prefixes[k]
    _guard_width(hi - lo, "sigma index sets")
    prefix = tuple(range(1, lo + 1))
    need = l - lo
    return tuple(
        prefix + combo for combo in combinations(range(lo + 1, hi + 1), need)
    )


def delta_sequence(matrix: HermitianMatrix) -> DeltaSequence:
    """Sums of all size-l principal minors for l = 1..n."""
    n = matrix.n
    _guard_width(n, "full minor sums")
    values = []
    for l in range(1, n + 1):
        total = Fraction(0)
        for idx in combinations(range(1, n + 1), l):
            total += matrix.principal_minor(idx)
        values.append(total)
    return DeltaSequence(tuple(values))


def sigma_direct(matrix: HermitianMatrix, partition: BlockPartition) -> SigmaSequence:
    """Partitioned minor sums straight from the definition.

    Total: works for any Hermitian matrix and any partition of its
    dimension, admissible or not.
    """
    if partition.n != matrix.n:
        raise ValueError(
            f"partition covers {partition.n} rows, matrix has {matrix.n}"
        )
    values = []
    for l in range(1, matrix.n + 1):
        total = Fraction(0)
        for idx in sigma_index_sets(l, partition):
            total += matrix.principal_minor(idx)
        values.append(total)
    return SigmaSequence(tuple(values), partition)


def sigma_schur(matrix: HermitianMatrix, partition: BlockPartition) -> SigmaSequence:
    """Partitioned minor sums by recursive Schur elimination.

    Needs every leading block submatrix (all blocks but the last) to be
    invertible; raises SingularLeadingBlockError naming the first prefix
    that fails.  With one block this is just `delta_sequence`.
    """
    if partition.n != matrix.n:
        raise ValueError(
            f"partition covers {partition.n} rows, matrix has {matrix.n}"
        )
    if partition.t <= 1:
        return SigmaSequence(delta_sequence(matrix).values, partition)
    split = schur_split(matrix, partition)
    head = sigma_schur(split.leading, BlockPartition(partition.sizes[:-1]))
    leading_det = split.leading.determinant()
    tail_sums = delta_sequence(split.complement)
    values = head.values + tuple(leading_det * d for d in tail_sums.values)
    return SigmaSequence(values, partition)
