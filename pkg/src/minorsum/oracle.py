"""Independent brute-force oracles.

Every answer the minor-sum engine produces can be recomputed here by a
route that shares nothing with the minors and inertia modules beyond
the scalar and matrix types:

* `lagrange_inertia` diagonalizes by exact symmetric congruence
  elimination and counts diagonal signs;
* `faddeev_char_poly` builds the characteristic polynomial from the
  trace recursion M_1 = A, c_1 = -tr M_1, M_{j+1} = A (M_j + c_j I),
  c_{j+1} = -tr(M_{j+1}) / (j+1);
* `psd_all_minors` checks nonnegativity of every principal minor;
* `descartes_positive_roots_bound` counts coefficient sign changes,
  which for a polynomial with all real roots is the exact count of
  positive roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InternalCheckError, SizeLimitError
from .inertia import CharPoly, Inertia
from .matrices import Grid, HermitianMatrix, identity_grid, mat_mul
from .scalars import I, ONE, GaussianRational

__all__ = [
    "DiagonalCongruenceResult",
    "lagrange_inertia",
    "faddeev_char_poly",
    "psd_all_minors",
    "descartes_positive_roots_bound",
]


@dataclass(frozen=True)
class DiagonalCongruenceResult:
    """Diagonal entries of S* A S, the transform S, and the sign counts."""

    diagonal: tuple[Fraction, ...]
    transform: Grid
    inertia: Inertia


def lagrange_inertia(matrix: HermitianMatrix) -> DiagonalCongruenceResult:
    """Exact congruence diagonalization; total on Hermitian input.

    Works column by column.  If the remaining diagonal is all zero but
    some off-diagonal entry a_rc is nonzero, one congruence that adds a
    multiple of row/column c into row/column r creates the nonzero
    diagonal entry 2 Re(coef * a_rc); coef = 1 works unless a_rc is
    purely imaginary, where coef = i does.
    """
    n = matrix.n
    m = [list(row) for row in matrix.rows]
    s = [list(row) for row in identity_grid(n)]

    def add_into(dst: int, src: int, coef: GaussianRational) -> None:
        # col_dst += coef * col_src, row_dst += conj(coef) * row_src
        conj = coef.conjugate()
        for r in range(n):
            m[r][dst] = m[r][dst] + coef * m[r][src]
        for c in range(n):
            m[dst][c] = m[dst][c] + conj * m[src][c]
        for r in range(n):
            s[r][dst] = s[r][dst] + coef * s[r][src]

    def swap(a: int, b: int) -> None:
        for r in range(n):
            m[r][a], m[r][b] = m[r][b], m[r][a]
        m[a], m[b] = m[b], m[a]
        for r in range(n):
            s[r][a], s[r][b] = s[r][b], s[r][a]

    for i in range(n):
        pivot = next((j for j in range(i, n) if not m[j][j].is_zero()), None)
        if pivot is None:
            off = next(
                (
                    (r, c)
                    for r in range(i, n)
                    for c in range(r + 1, n)
                    if not m[r][c].is_zero()
                ),
                None,
            )
            if off is None:
                break
            r, c = off
            coef = ONE if m[r][c].re else I
            add_into(r, c, coef)
            pivot = r
        if pivot != i:
            swap(i, pivot)
        d = m[i][i]
        for j in range(i + 1, n):
            entry = m[i][j]
            if not entry.is_zero():
                add_into(j, i, -(entry / d))

    for r in range(n):
        for c in range(n):
            if r != c and not m[r][c].is_zero():
                raise InternalCheckError(
                    "congruence elimination left an off-diagonal residue"
                )
    diagonal = []
    for i in range(n):
        entry = m[i][i]
        if entry.im:
            raise InternalCheckError(
                "congruence elimination produced a complex diagonal entry"
            )
        diagonal.append(entry.re)
    p = sum(1 for d in diagonal if d > 0)
    q = sum(1 for d in diagonal if d < 0)
    return DiagonalCongruenceResult(
        diagonal=tuple(diagonal),
        transform=tuple(tuple(row) for row in s),
        inertia=Inertia(p, q, n - p - q),
    )


def faddeev_char_poly(matrix: HermitianMatrix) -> CharPoly:
    """Characteristic polynomial from the trace recursion.

    All divisions are exact over the rationals; a complex coefficient
    would mean broken arithmetic and raises InternalCheckError.
    """
    n = matrix.n
    a = matrix.rows
    coefficients: list[Fraction] = []
    current = a
    for j in range(1, n + 1):
        if j > 1:
            shifted = tuple(
                tuple(
                    current[r][c] + coefficients[-1] if r == c else current[r][c]
                    for c in range(n)
                )
                for r in range(n)
            )
            current = mat_mul(a, shifted)
        trace = GaussianRational()
        for i in range(n):
            trace = trace + current[i][i]
        value = -(trace / j)
        if value.im:
            raise InternalCheckError(
                f"trace recursion produced complex coefficient {value}"
            )
        coefficients.append(value.re)
    return CharPoly(tuple(coefficients))


def psd_all_minors(matrix: HermitianMatrix) -> bool:
    """Positive semidefiniteness by checking every principal minor.

    Exponential in n, so refuses n > 12.
    """
    if matrix.n > 12:
        raise SizeLimitError(
            f"all-principal-minors check is limited to n <= 12, got {matrix.n}"
        )
    for size in range(1, matrix.n + 1):
        for idx in combinations(range(1, matrix.n + 1), size):
            if matrix.principal_minor(idx) < 0:
                return False
    return True


def descartes_positive_roots_bound(poly: CharPoly) -> int:
    """Sign changes of (1, c_1, .., c_n), zeros skipped.

    An upper bound on the positive-root count in general; exact when
    every root is real, which holds for characteristic polynomials of
    Hermitian matrices.
    """
    count = 0
    previous = 0
    for value in (Fraction(1),) + poly.coefficients:
        if value > 0:
            s = 1
        elif value < 0:
            s = -1
        else:
            continue
        if previous and s != previous:
            count += 1
        previous = s
    return count
