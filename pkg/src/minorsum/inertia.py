"""Inertia, rank and definiteness from partitioned minor sums.

Everything here reads signs off one sigma sequence.  For an admissible
partition (all leading block submatrices invertible):

* the negative eigenvalue count is the number of sign changes in
  1, sigma_1, sigma_2, .., sigma_n, zeros skipped;
* the positive count is the same statistic after flipping the sign of
  every odd-position value;
* the rank is the largest index with a nonzero sigma, and the trailing
  sigma values vanish beyond it;
* all sigma positive means positive definite, and in the semidefinite
  case the sequence is a strictly positive prefix followed by zeros
  (checked here as an internal invariant, violations are bugs).

The characteristic polynomial falls out of the one-block sums: the
coefficient of x^(n-i) is (-1)^i times the i-th full minor sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    InadmissiblePartitionError,
    InternalCheckError,
    ZeroInteriorSigmaError,
)
from .matrices import BlockPartition, HermitianMatrix
from .minors import delta_sequence, sigma_direct
from .scalars import format_rational, sign

__all__ = [
    "Inertia",
    "Definiteness",
    "JacobiForm",
    "CharPoly",
    "POSITIVE_DEFINITE",
    "POSITIVE_SEMIDEFINITE",
    "NEGATIVE_DEFINITE",
    "NEGATIVE_SEMIDEFINITE",
    "INDEFINITE",
    "sign_changes",
    "admissible",
    "inertia_from_sigma",
    "rank_from_sigma",
    "classify_definiteness",
    "jacobi_form",
    "char_poly_from_delta",
]


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, negative and zero eigenvalues."""

    p: int
    q: int
    z: int

    @property
    def rank(self) -> int:
        return self.p + self.q

    def as_dict(self) -> dict[str, int]:
        return {"p": self.p, "q": self.q, "z": self.z}


POSITIVE_DEFINITE = "positive_definite"
POSITIVE_SEMIDEFINITE = "positive_semidefinite"
NEGATIVE_DEFINITE = "negative_definite"
NEGATIVE_SEMIDEFINITE = "negative_semidefinite"
INDEFINITE = "indefinite"


@dataclass(frozen=True)
class Definiteness:
    """Definiteness class; semidefinite kinds record where zeros start.

    ``zero_from`` is the first one-based index whose sigma value (for
    the negative kinds: of the negated matrix) is zero; 1 means the
    whole sequence vanishes, which happens only for the zero matrix.
    """

    kind: str
    zero_from: int | None = None

    def describe(self) -> str:
        text = self.kind.replace("_", " ")
        if self.zero_from is not None:
            text += f" (sigma zero from index {self.zero_from})"
        return text


@dataclass(frozen=True)
class JacobiForm:
    """Diagonal coefficients of a congruent diagonal form, built from
    consecutive minor-sum ratios."""

    coefficients: tuple[Fraction, ...]

    @property
    def positive_count(self) -> int:
        return sum(1 for c in self.coefficients if c > 0)

    @property
    def negative_count(self) -> int:
        return sum(1 for c in self.coefficients if c < 0)


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial, stored as the coefficients
    c_1..c_n of x^(n-1) down to the constant term."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def text(self) -> str:
        n = self.degree
        if n == 0:
            return "1"
        parts = ["x" if n == 1 else f"x^{n}"]
        for i, c in enumerate(self.coefficients, start=1):
            if c == 0:
                continue
            power = n - i
            magnitude = abs(c)
            if power == 0:
                body = format_rational(magnitude)
            else:
                variable = "x" if power == 1 else f"x^{power}"
                body = variable if magnitude == 1 else format_rational(magnitude) + variable
            parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.text()


def sign_changes(values: Iterable[Fraction | int]) -> int:
    """Sign changes along a sequence, ignoring zeros."""
    count = 0
    previous = 0
    for value in values:
        s = sign(value)
        if s == 0:
            continue
        if previous and s != previous:
            count += 1
        previous = s
    return count


def admissible(matrix: HermitianMatrix, partition: BlockPartition) -> bool:
    """Whether every leading block submatrix (all blocks but the last)
    is invertible."""
    if partition.n != matrix.n:
        raise ValueError(
            f"partition covers {partition.n} rows, matrix has {matrix.n}"
        )
    return all(
        matrix.principal_minor(range(1, prefix + 1)) != 0
        for prefix in partition.prefixes[1:-1]
    )


def _require_admissible(matrix: HermitianMatrix, partition: BlockPartition) -> None:
    if partition.n != matrix.n:
        raise ValueError(
            f"partition covers {partition.n} rows, matrix has {matrix.n}"
        )
    for prefix in partition.prefixes[1:-1]:
        if matrix.principal_minor(range(1, prefix + 1)) == 0:
            raise InadmissiblePartitionError(prefix)


def inertia_from_sigma(matrix: HermitianMatrix, partition: BlockPartition) -> Inertia:
    """Eigenvalue sign counts read off the sigma sequence."""
    _require_admissible(matrix, partition)
    values = sigma_direct(matrix, partition).values
    plus_seq = [Fraction(1)] + [
        -v if l % 2 else v for l, v in enumerate(values, start=1)
    ]
    minus_seq = [Fraction(1)] + list(values)
    p = sign_changes(plus_seq)
    q = sign_changes(minus_seq)
    return Inertia(p, q, matrix.n - p - q)


def rank_from_sigma(matrix: HermitianMatrix, partition: BlockPartition) -> int:
    """Largest index with a nonzero sigma value (0 for the zero matrix)."""
    _require_admissible(matrix, partition)
    values = sigma_direct(matrix, partition).values
    for l in range(matrix.n, 0, -1):
        if values[l - 1] != 0:
            return l
    return 0


def _zero_start(values: tuple[Fraction, ...]) -> int:
    """First index of the all-zero tail; validates the semidefinite
    pattern (strictly positive prefix, then only zeros)."""
    first = next(i for i, v in enumerate(values, start=1) if v == 0)
    if any(values[i] != 0 for i in range(first, len(values))):
        raise InternalCheckError(
            "semidefinite minor sums show a zero followed by a nonzero value"
        )
    return first


def classify_definiteness(
    matrix: HermitianMatrix, partition: BlockPartition
) -> Definiteness:
    """Definiteness class read off sigma signs; negative kinds reuse the
    same tests through the sign flip sigma_l -> (-1)^l sigma_l, which is
    the sigma sequence of the negated matrix."""
    _require_admissible(matrix, partition)
    values = sigma_direct(matrix, partition).values
    if all(v > 0 for v in values):
        return Definiteness(POSITIVE_DEFINITE)
    if all(v >= 0 for v in values):
        return Definiteness(POSITIVE_SEMIDEFINITE, zero_from=_zero_start(values))
    negated = tuple(
        -v if l % 2 else v for l, v in enumerate(values, start=1)
    )
    if all(v > 0 for v in negated):
        return Definiteness(NEGATIVE_DEFINITE)
    if all(v >= 0 for v in negated):
        return Definiteness(NEGATIVE_SEMIDEFINITE, zero_from=_zero_start(negated))
    return Definiteness(INDEFINITE)


def jacobi_form(matrix: HermitianMatrix, partition: BlockPartition) -> JacobiForm:
    """Coefficients sigma_1, sigma_2/sigma_1, .., sigma_r/sigma_{r-1}.

    Defined only when sigma_1..sigma_r are all nonzero for r the rank;
    otherwise raises ZeroInteriorSigmaError naming the first zero.
    """
    _require_admissible(matrix, partition)
    values = sigma_direct(matrix, partition).values
    rank = 0
    for l in range(matrix.n, 0, -1):
        if values[l - 1] != 0:
            rank = l
            break
    for i in range(rank):
        if values[i] == 0:
            raise ZeroInteriorSigmaError(i + 1)
    coefficients = []
    for i in range(rank):
        if i == 0:
            coefficients.append(values[0])
        else:
            coefficients.append(values[i] / values[i - 1])
    return JacobiForm(tuple(coefficients))


def char_poly_from_delta(matrix: HermitianMatrix) -> CharPoly:
    """Characteristic polynomial via the full minor sums: the x^(n-i)
    coefficient is (-1)^i times the i-th sum."""
    values = delta_sequence(matrix).values
    return CharPoly(
        tuple(-v if i % 2 else v for i, v in enumerate(values, start=1))
    )
