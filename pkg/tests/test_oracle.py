import random
from fractions import Fraction

import pytest

import support
from minorsum.errors import SizeLimitError
from minorsum.inertia import CharPoly, Inertia, char_poly_from_delta
from minorsum.matrices import (
    HermitianMatrix,
    conj_transpose,
    grid_det,
    mat_mul,
)
from minorsum.oracle import (
    descartes_positive_roots_bound,
    faddeev_char_poly,
    lagrange_inertia,
    psd_all_minors,
)
from minorsum.scalars import I, gaussian


def diagonal_grid_of(result):
    n = len(result.diagonal)
    return tuple(
        tuple(
            gaussian(result.diagonal[i] if i == j else 0) for j in range(n)
        )
        for i in range(n)
    )


def test_lagrange_diagonal_input():
    got = lagrange_inertia(HermitianMatrix.diagonal((3, 0, -2, 5)))
    assert got.inertia == Inertia(2, 1, 1)
    assert sorted(got.diagonal) == [-2, 0, 3, 5]


def test_lagrange_zero_diagonal_real_offdiag():
    h = HermitianMatrix([[0, 1], [1, 0]])
    got = lagrange_inertia(h)
    assert got.inertia == Inertia(1, 1, 0)


def test_lagrange_zero_diagonal_imaginary_offdiag():
    h = HermitianMatrix([[0, I], [-I, 0]])
    got = lagrange_inertia(h)
    assert got.inertia == Inertia(1, 1, 0)


def test_lagrange_transform_bookkeeping():
    # the recorded S must actually perform the congruence: S* A S = D
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(1, 5)
        h = support.random_hermitian(rng, n)
        got = lagrange_inertia(h)
        moved = mat_mul(
            conj_transpose(got.transform), mat_mul(h.rows, got.transform)
        )
        expected = diagonal_grid_of(got)
        assert all(
            moved[r][c] == expected[r][c] for r in range(n) for c in range(n)
        )
        det = grid_det(got.transform)
        assert det.abs_squared() == 1


def test_lagrange_rank_deficient():
    rng = random.Random(33)
    for _ in range(20):
        h = support.random_psd_product(rng, 5, 2)
        got = lagrange_inertia(h)
        assert got.inertia.q == 0
        assert got.inertia.p <= 2


def test_lagrange_signature_families():
    rng = random.Random(35)
    for _ in range(20):
        p = rng.randint(0, 2)
        q = rng.randint(0, 2)
        h = support.random_signature_hermitian(rng, 4, p, q)
        got = lagrange_inertia(h).inertia
        assert got.p <= p and got.q <= q


def test_faddeev_examples():
    assert faddeev_char_poly(HermitianMatrix.diagonal((1, 2, 3))).coefficients == (
        -6,
        11,
        -6,
    )
    assert faddeev_char_poly(HermitianMatrix.diagonal((0, 0))).coefficients == (0, 0)


def test_faddeev_matches_minor_route():
    rng = random.Random(37)
    for _ in range(30):
        n = rng.randint(1, 5)
        h = support.random_hermitian(rng, n)
        assert faddeev_char_poly(h) == char_poly_from_delta(h)


def test_psd_all_minors():
    assert psd_all_minors(HermitianMatrix.diagonal((1, 1, 0)))
    assert not psd_all_minors(HermitianMatrix.diagonal((1, -1)))
    assert psd_all_minors(support.hilbert_matrix(3))
    # indefinite despite a PSD-looking leading corner
    assert not psd_all_minors(HermitianMatrix([[1, 0], [0, -1]]))


def test_psd_all_minors_matches_oracle_on_products():
    rng = random.Random(39)
    for _ in range(15):
        h = support.random_psd_product(rng, 4, rng.randint(1, 4))
        assert psd_all_minors(h)
        assert lagrange_inertia(h).inertia.q == 0


def test_psd_all_minors_size_guard():
    with pytest.raises(SizeLimitError):
        psd_all_minors(HermitianMatrix.identity(13))


def test_descartes_counts_positive_eigenvalues():
    rng = random.Random(41)
    for _ in range(30):
        n = rng.randint(1, 5)
        h = support.random_hermitian(rng, n)
        char = char_poly_from_delta(h)
        inertia = lagrange_inertia(h).inertia
        assert descartes_positive_roots_bound(char) == inertia.p
        negated_char = char_poly_from_delta(h.negated())
        assert descartes_positive_roots_bound(negated_char) == inertia.q


def test_descartes_plain_examples():
    # x^2 - 3x + 2 = (x-1)(x-2): two positive roots
    assert descartes_positive_roots_bound(CharPoly((Fraction(-3), Fraction(2)))) == 2
    # x^2 + 3x + 2: none
    assert descartes_positive_roots_bound(CharPoly((Fraction(3), Fraction(2)))) == 0
    # x^2: none, zeros skipped
    assert descartes_positive_roots_bound(CharPoly((Fraction(0), Fraction(0)))) == 0
