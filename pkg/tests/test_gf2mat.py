"""GF(2) matrix primitives and the circulant/polynomial correspondence."""

import numpy as np
import pytest

from gbx.gf2mat import (as_gf2, block_compose, circulant_from_poly,
                        in_rowspace, is_circulant, nullspace,
                        poly_from_circulant, rank_gf2, row_basis, row_reduce,
                        triangular_split)
from gbx.gf2poly import RingPoly, poly_mul


def rank_oracle(M):
    """Independent elimination rank over GF(2) (no shared helpers)."""
    A = [int("".join(map(str, row)), 2) for row in np.asarray(M) & 1]
    rank = 0
    for col in range(np.asarray(M).shape[1]):
        bit = 1 << (np.asarray(M).shape[1] - 1 - col)
        piv = next((i for i in range(rank, len(A)) if A[i] & bit), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(len(A)):
            if i != rank and A[i] & bit:
                A[i] ^= A[rank]
        rank += 1
    return rank


def test_as_gf2_masks_to_bits():
    A = as_gf2([[2, 3], [4, 5]])
    assert A.dtype == np.uint8
    assert np.array_equal(A, [[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        as_gf2([1, 0, 1])


def test_circulant_structure():
    p = RingPoly.from_mask(0b10011, 5)  # 1 + x + x^4
    C = circulant_from_poly(p)
    assert C.shape == (5, 5)
    # first column holds the coefficients, M[i, j] = p_{(i-j) mod l}
    assert np.array_equal(C[:, 0], [1, 1, 0, 0, 1])
    for i in range(5):
        for j in range(5):
            assert C[i, j] == p.coeffs[(i - j) % 5]
    assert is_circulant(C)
    assert poly_from_circulant(C) == p


def test_circulant_product_matches_ring_product():
    rng = np.random.default_rng(21)
    for _ in range(50):
        ell = int(rng.integers(2, 9))
        u = RingPoly.from_mask(int(rng.integers(0, 1 << ell)), ell)
        v = RingPoly.from_mask(int(rng.integers(0, 1 << ell)), ell)
        CU = circulant_from_poly(u)
        CV = circulant_from_poly(v)
        prod = (CU @ CV) % 2
        assert np.array_equal(prod, circulant_from_poly(poly_mul(u, v)))
        # circulants commute
        assert np.array_equal(prod, (CV @ CU) % 2)


def test_poly_from_circulant_rejects_noncirculant():
    M = np.eye(4, dtype=np.uint8)
    M[0, 1] = 1
    assert not is_circulant(M)
    with pytest.raises(ValueError):
        poly_from_circulant(M)
    with pytest.raises(ValueError):
        poly_from_circulant(np.zeros((2, 3), dtype=np.uint8))


def test_row_reduce_properties():
    rng = np.random.default_rng(22)
    for _ in range(50):
        m, n = rng.integers(1, 9, size=2)
        A = rng.integers(0, 2, size=(m, n)).astype(np.uint8)
        R, pivots = row_reduce(A)
        assert len(pivots) == rank_oracle(A)
        # pivot columns are unit vectors in the rref
        for i, c in enumerate(pivots):
            col = np.zeros(m, dtype=np.uint8)
            col[i] = 1
            assert np.array_equal(R[:, c], col)
        # row space is preserved: every rref row reduces to zero against A's
        # rows and vice versa (rank check captures both inclusions)
        assert rank_oracle(np.vstack([A, R])) == len(pivots)


def test_rank_matches_oracle():
    rng = np.random.default_rng(23)
    for _ in range(100):
        m, n = rng.integers(1, 10, size=2)
        A = rng.integers(0, 2, size=(m, n)).astype(np.uint8)
        assert rank_gf2(A) == rank_oracle(A)


def test_nullspace_is_a_kernel_basis():
    rng = np.random.default_rng(24)
    for _ in range(50):
        m, n = rng.integers(1, 9, size=2)
        A = rng.integers(0, 2, size=(m, n)).astype(np.uint8)
        N = nullspace(A)
        assert N.shape[0] == n - rank_gf2(A)
        if N.size:
            assert not ((A @ N.T) % 2).any()
            assert rank_gf2(N) == N.shape[0]


def test_in_rowspace():
    A = np.array([[1, 0, 1, 0], [0, 1, 1, 0]], dtype=np.uint8)
    R, piv = row_reduce(A)
    assert in_rowspace([1, 1, 0, 0], R, piv)
    assert not in_rowspace([0, 0, 0, 1], R, piv)


def test_row_basis_spans_input():
    A = np.array([[1, 1, 0], [1, 1, 0], [0, 0, 1]], dtype=np.uint8)
    B = row_basis(A)
    assert B.shape == (2, 3)
    assert rank_gf2(np.vstack([A, B])) == 2


def test_triangular_split_reconstructs():
    rng = np.random.default_rng(25)
    A = rng.integers(0, 2, size=(6, 6)).astype(np.uint8)
    L, U = triangular_split(A)
    assert np.array_equal(L ^ U, A)
    assert not np.triu(L, k=1).any()
    assert not np.tril(U).any()
    with pytest.raises(ValueError):
        triangular_split(np.zeros((2, 3), dtype=np.uint8))


def test_block_compose():
    I = np.eye(2, dtype=np.uint8)
    Z = np.zeros((2, 2), dtype=np.uint8)
    M = block_compose([[I, Z], [Z, I]])
    assert np.array_equal(M, np.eye(4, dtype=np.uint8))
    with pytest.raises(ValueError):
        block_compose([[I, Z], [Z]])
    with pytest.raises(ValueError):
        block_compose([[I, np.zeros((3, 2), np.uint8)]])
    with pytest.raises(ValueError):
        block_compose([])
