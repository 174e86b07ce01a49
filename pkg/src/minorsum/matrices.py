"""Hermitian matrices over exact Gaussian rationals.

Provides validated Hermitian construction, exact determinants by
fraction Gaussian elimination with first-nonzero pivoting, principal
submatrices with memoized principal minors, block partitions with
prefix bookkeeping, the Schur complement split used by the recursive
minor-sum route, and exact unitary machinery (Cayley transform, block
direct sums, congruence) for invariance testing.

Matrix text format: the first content line holds the dimension n, the
next n lines hold n whitespace-separated scalar tokens each.  Lines
starting with ``#`` and blank lines are ignored.  Hermitian validation
happens on load and reports the first offending entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    InternalCheckError,
    MatrixParseError,
    NotHermitianError,
    ScalarParseError,
    SingularLeadingBlockError,
)
from .scalars import ONE, ZERO, GaussianRational, gaussian, parse_scalar

Grid = tuple[tuple[GaussianRational, ...], ...]

__all__ = [
    "Grid",
    "HermitianMatrix",
    "BlockPartition",
    "SchurSplit",
    "as_grid",
    "identity_grid",
    "conj_transpose",
    "mat_mul",
    "mat_sub",
    "grid_det",
    "grid_inverse",
    "is_unitary",
    "direct_sum",
    "schur_split",
    "cayley_unitary",
    "block_congruence",
    "parse_matrix",
    "load_matrix",
]


# ---------------------------------------------------------------------------
# plain grid helpers (also used by the oracle module)


def as_grid(rows: Iterable[Iterable[object]]) -> Grid:
    """Coerce nested int/Fraction/GaussianRational data to a tuple grid."""
    return tuple(tuple(gaussian(entry) for entry in row) for row in rows)


def identity_grid(n: int) -> Grid:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def conj_transpose(grid: Grid) -> Grid:
    rows = len(grid)
    cols = len(grid[0]) if rows else 0
    return tuple(
        tuple(grid[i][j].conjugate() for i in range(rows)) for j in range(cols)
    )


def mat_mul(a: Grid, b: Grid) -> Grid:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix shapes do not allow multiplication")
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = []
    for row in a:
        out_row = []
        for j in range(cols):
            acc = ZERO
            for k in range(inner):
                acc = acc + row[k] * b[k][j]
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_sub(a: Grid, b: Grid) -> Grid:
    return tuple(
        tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def grid_det(grid: Grid) -> GaussianRational:
    """Exact determinant by Gaussian elimination, first nonzero pivot.

    The 0x0 determinant is 1 (empty product convention).
    """
    n = len(grid)
    m = [list(row) for row in grid]
    det = ONE
    negate = False
    for col in range(n):
        pivot_row = next(
            (r for r in range(col, n) if not m[r][col].is_zero()), None
        )
        if pivot_row is None:
            return ZERO
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            negate = not negate
        pivot = m[col][col]
        det = det * pivot
        inv = pivot.inverse()
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor.is_zero():
                continue
            row_r = m[r]
            row_c = m[col]
            for c in range(col + 1, n):
                row_r[c] = row_r[c] - factor * row_c[c]
    return -det if negate else det


def grid_inverse(grid: Grid) -> Grid:
    """Exact inverse by Gauss-Jordan elimination; raises on singular input."""
    n = len(grid)
    m = [list(row) + list(ident_row) for row, ident_row in zip(grid, identity_grid(n))]
    for col in range(n):
        pivot_row = next(
            (r for r in range(col, n) if not m[r][col].is_zero()), None
        )
        if pivot_row is None:
            raise ValueError("matrix is singular")
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
        inv = m[col][col].inverse()
        m[col] = [inv * entry for entry in m[col]]
        for r in range(n):
            if r == col or m[r][col].is_zero():
                continue
            factor = m[r][col]
            m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def is_unitary(grid: Grid) -> bool:
    """Exact check that the conjugate transpose is a two-sided inverse."""
    n = len(grid)
    if any(len(row) != n for row in grid):
        return False
    return mat_mul(conj_transpose(grid), grid) == identity_grid(n)


def direct_sum(blocks: Sequence[Grid]) -> Grid:
    n = sum(len(b) for b in blocks)
    out = [[ZERO] * n for _ in range(n)]
    offset = 0
    for block in blocks:
        k = len(block)
        for i in range(k):
            for j in range(k):
                out[offset + i][offset + j] = block[i][j]
        offset += k
    return tuple(tuple(row) for row in out)


# ---------------------------------------------------------------------------
# Hermitian matrices


def _validated_index_tuple(indices: Iterable[int], n: int) -> tuple[int, ...]:
    idx = tuple(int(i) for i in indices)
    for pos, i in enumerate(idx):
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
        if pos and idx[pos - 1] >= i:
            raise ValueError(f"index set {idx} is not strictly increasing")
    return idx


class HermitianMatrix:
    """Immutable square matrix equal to its conjugate transpose.

    Entries are GaussianRational; ints and Fractions are accepted at
    construction.  Every principal minor of such a matrix is real and
    comes back as a Fraction; a nonzero imaginary residue would mean a
    bug in the arithmetic and raises InternalCheckError.  Minors are
    memoized per index set, which makes repeated sums over overlapping
    families cheap.
    """

    __slots__ = ("n", "rows", "_minors")

    def __init__(self, rows: Iterable[Iterable[object]]) -> None:
        grid = as_grid(rows)
        n = len(grid)
        for i, row in enumerate(grid):
            if len(row) != n:
                raise ValueError(
                    f"row {i + 1} has {len(row)} entries, expected {n}"
                )
        for i in range(n):
            for j in range(i, n):
                if grid[i][j] != grid[j][i].conjugate():
                    raise NotHermitianError(j + 1, i + 1)
        self.n = n
        self.rows = grid
        self._minors: dict[tuple[int, ...], Fraction] = {}

    @classmethod
    def diagonal(cls, values: Iterable[object]) -> "HermitianMatrix":
        entries = [gaussian(v) for v in values]
        n = len(entries)
        return cls(
            tuple(
                tuple(entries[i] if i == j else ZERO for j in range(n))
                for i in range(n)
            )
        )

    @classmethod
    def identity(cls, n: int) -> "HermitianMatrix":
        return cls(identity_grid(n))

    def principal_submatrix(self, indices: Iterable[int]) -> "HermitianMatrix":
        idx = _validated_index_tuple(indices, self.n)
        return HermitianMatrix(
            tuple(
                tuple(self.rows[i - 1][j - 1] for j in idx) for i in idx
            )
        )

    def principal_minor(self, indices: Iterable[int]) -> Fraction:
        idx = _validated_index_tuple(indices, self.n)
        cached = self._minors.get(idx)
        if cached is None:
            det = grid_det(
                tuple(tuple(self.rows[i - 1][j - 1] for j in idx) for i in idx)
            )
            if det.im:
                raise InternalCheckError(
                    f"principal minor {idx} has nonzero imaginary part {det}"
                )
            cached = det.re
            self._minors[idx] = cached
        return cached

    def determinant(self) -> Fraction:
        return self.principal_minor(range(1, self.n + 1))

    def negated(self) -> "HermitianMatrix":
        return HermitianMatrix(
            tuple(tuple(-entry for entry in row) for row in self.rows)
        )

    def permuted(self, perm: Sequence[int]) -> "HermitianMatrix":
        """Relabel rows and columns: index i becomes perm[i-1]."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError(f"{tuple(perm)} is not a permutation of 1..{self.n}")
        inverse = [0] * self.n
        for i, image in enumerate(perm, start=1):
            inverse[image - 1] = i
        return HermitianMatrix(
            tuple(
                tuple(self.rows[inverse[u] - 1][inverse[v] - 1] for v in range(self.n))
                for u in range(self.n)
            )
        )

    def to_text(self) -> str:
        """Matrix file format block: dimension line plus entry rows."""
        lines = [str(self.n)]
        for row in self.rows:
            lines.append(" ".join(str(entry) for entry in row))
        return "\n".join(lines) + "\n"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(entry) for entry in row) for row in self.rows
        )
        return f"HermitianMatrix[{body}]"


# ---------------------------------------------------------------------------
# block partitions


@dataclass(frozen=True)
class BlockPartition:
    """Ordered sizes of the diagonal blocks of a partitioned matrix."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(k) for k in self.sizes)
        if not sizes or any(k < 1 for k in sizes):
            raise ValueError("block sizes must be a nonempty list of positive integers")
        object.__setattr__(self, "sizes", sizes)

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def prefixes(self) -> tuple[int, ...]:
        """Running totals K_0 = 0, K_1, .., K_t = n."""
        out = [0]
        for k in self.sizes:
            out.append(out[-1] + k)
        return tuple(out)

    @property
    def leading_size(self) -> int:
        """Rows covered by all blocks except the last (0 when t <= 1)."""
        return self.prefixes[-2] if self.t else 0

    @classmethod
    def finest(cls, n: int) -> "BlockPartition":
        return cls((1,) * n)

    @classmethod
    def coarsest(cls, n: int) -> "BlockPartition":
        return cls((n,))

    @classmethod
    def parse(cls, text: str) -> "BlockPartition":
        parts = [piece.strip() for piece in text.split(",")]
        if not all(part.lstrip("+").isdigit() for part in parts):
            raise ValueError(f"invalid block list {text!r}")
        return cls(tuple(int(part) for part in parts))

    def text(self) -> str:
        return ",".join(str(k) for k in self.sizes)


# ---------------------------------------------------------------------------
# Schur complement split


@dataclass(frozen=True)
class SchurSplit:
    """Split of a partitioned Hermitian matrix at its last block boundary.

    ``leading`` covers all blocks but the last, ``offdiag`` is the
    upper-right strip, and ``complement`` is the trailing block minus
    offdiag* leading^{-1} offdiag.
    """

    leading: HermitianMatrix
    offdiag: Grid
    complement: HermitianMatrix


def schur_split(matrix: HermitianMatrix, partition: BlockPartition) -> SchurSplit:
    """Eliminate all blocks but the last; requires t >= 2 and an
    invertible leading part.

    det(matrix) = det(leading) * det(complement) holds exactly.
    """
    if partition.n != matrix.n:
        raise ValueError(
            f"partition covers {partition.n} rows, matrix has {matrix.n}"
        )
    if partition.t < 2:
        raise ValueError("schur_split needs at least two blocks")
    k = partition.leading_size
    n = matrix.n
    leading = matrix.principal_submatrix(range(1, k + 1))
    if leading.determinant() == 0:
        raise SingularLeadingBlockError(k)
    offdiag: Grid = tuple(
        tuple(matrix.rows[i][j] for j in range(k, n)) for i in range(k)
    )
    trailing: Grid = tuple(
        tuple(matrix.rows[i][j] for j in range(k, n)) for i in range(k, n)
    )
    product = mat_mul(
        conj_transpose(offdiag), mat_mul(grid_inverse(leading.rows), offdiag)
    )
    try:
        complement = HermitianMatrix(mat_sub(trailing, product))
    except NotHermitianError as exc:
        raise InternalCheckError(
            "Schur complement of a Hermitian matrix came out non-Hermitian"
        ) from exc
    return SchurSplit(leading=leading, offdiag=offdiag, complement=complement)


# ---------------------------------------------------------------------------
# exact unitaries and congruence


def cayley_unitary(skew: Iterable[Iterable[object]]) -> Grid:
    """Exact unitary (I - S)(I + S)^{-1} from a skew-Hermitian S.

    For skew-Hermitian S the factor I + S is always invertible, so this
    is total on valid input.  The result satisfies U*U = I exactly.
    """
    grid = as_grid(skew)
    n = len(grid)
    for i, row in enumerate(grid):
        if len(row) != n:
            raise ValueError("skew-Hermitian input must be square")
    for i in range(n):
        for j in range(i, n):
            if grid[i][j] != -grid[j][i].conjugate():
                raise ValueError(
                    f"entry ({i + 1},{j + 1}) breaks skew-Hermitian symmetry"
                )
    ident = identity_grid(n)
    plus = tuple(
        tuple(ident[i][j] + grid[i][j] for j in range(n)) for i in range(n)
    )
    minus = tuple(
        tuple(ident[i][j] - grid[i][j] for j in range(n)) for i in range(n)
    )
    try:
        unitary = mat_mul(minus, grid_inverse(plus))
    except ValueError as exc:
        raise InternalCheckError(
            "I + S singular for a skew-Hermitian S"
        ) from exc
    if not is_unitary(unitary):
        raise InternalCheckError("Cayley transform produced a non-unitary matrix")
    return unitary


def block_congruence(
    matrix: HermitianMatrix,
    partition: BlockPartition,
    blocks: Sequence[Iterable[Iterable[object]]],
) -> HermitianMatrix:
    """Exact congruence U* A U with U a direct sum of unitary blocks.

    Each block must be square of the partition's size and exactly
    unitary; anything else is rejected before any arithmetic on A.
    """
    if partition.n != matrix.n:
        raise ValueError(
            f"partition covers {partition.n} rows, matrix has {matrix.n}"
        )
    grids = [as_grid(b) for b in blocks]
    if len(grids) != partition.t:
        raise ValueError(
            f"expected {partition.t} blocks, got {len(grids)}"
        )
    for pos, (block, size) in enumerate(zip(grids, partition.sizes), start=1):
        if len(block) != size or any(len(row) != size for row in block):
            raise ValueError(f"block {pos} is not {size}x{size}")
        if not is_unitary(block):
            raise ValueError(f"block {pos} is not unitary")
    u = direct_sum(grids)
    result = mat_mul(conj_transpose(u), mat_mul(matrix.rows, u))
    try:
        return HermitianMatrix(result)
    except NotHermitianError as exc:
        raise InternalCheckError(
            "unitary congruence of a Hermitian matrix came out non-Hermitian"
        ) from exc


# ---------------------------------------------------------------------------
# matrix text format


def parse_matrix(text: str) -> HermitianMatrix:
    """Parse the matrix text format and validate Hermitian symmetry."""
    content = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not content:
        raise MatrixParseError("no content lines in matrix text")
    try:
        n = int(content[0])
    except ValueError:
        raise MatrixParseError(
            f"first content line must be the dimension, got {content[0]!r}"
        ) from None
    if n < 1:
        raise MatrixParseError("dimension must be a positive integer")
    if len(content) - 1 != n:
        raise MatrixParseError(
            f"expected {n} entry rows after the dimension line, "
            f"found {len(content) - 1}"
        )
    rows = []
    for r, line in enumerate(content[1:], start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixParseError(
                f"row {r} has {len(tokens)} entries, expected {n}"
            )
        try:
            rows.append(tuple(parse_scalar(token) for token in tokens))
        except ScalarParseError as exc:
            raise MatrixParseError(f"row {r}: {exc}") from exc
    return HermitianMatrix(tuple(rows))


def load_matrix(path: str | Path) -> HermitianMatrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))
