"""Dense GF(2) matrix primitives and the polynomial/circulant isomorphism.

Matrices are numpy uint8 arrays containing only 0/1. All code sizes in
scope (n up to a few thousand) are comfortably dense.
"""

from __future__ import annotations

import numpy as np

from .gf2poly import RingPoly


def as_gf2(M) -> np.ndarray:
    A = np.asarray(M, dtype=np.uint8)
    if A.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    return A & 1


def circulant_from_poly(p: RingPoly) -> np.ndarray:
    """l x l circulant with first column (p_0, ..., p_{l-1}); each later
    column is the previous one shifted cyclically down one step, so
    M[i, j] = p_{(i - j) mod l}."""
    ell = p.ring_dim
    c = np.fromiter(p.coeffs, dtype=np.uint8, count=ell)
    idx = (np.arange(ell)[:, None] - np.arange(ell)[None, :]) % ell
    return c[idx]


def is_circulant(M: np.ndarray) -> bool:
    A = as_gf2(M)
    n, m = A.shape
    if n != m:
        return False
    first = A[:, 0]
    for j in range(1, m):
        if not np.array_equal(A[:, j], np.roll(first, j)):
            return False
    return True


def poly_from_circulant(M) -> RingPoly:
    """Inverse of :func:`circulant_from_poly`; rejects non-circulant input."""
    A = as_gf2(M)
    if A.shape[0] != A.shape[1]:
        raise ValueError("matrix is not square")
    if not is_circulant(A):
        raise ValueError("matrix is not circulant")
    return RingPoly(tuple(int(b) for b in A[:, 0]), A.shape[0])


def row_reduce(M) -> tuple[np.ndarray, list]:
    """Reduced row-echelon form over GF(2); returns (rref, pivot columns)."""
    A = as_gf2(M).copy()
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(A[r:, c])[0]
        if hits.size == 0:
            continue
        piv = r + hits[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        elim = np.nonzero(A[:, c])[0]
        for i in elim:
            if i != r:
                A[i] ^= A[r]
        pivots.append(c)
        r += 1
    return A, pivots


def rank_gf2(M) -> int:
    """Rank over GF(2); the input is left unmodified."""
    return len(row_reduce(M)[1])


def row_basis(M) -> np.ndarray:
    """Rows forming a basis of the row space, in echelon form."""
    R, pivots = row_reduce(M)
    return R[: len(pivots)]


def nullspace(M) -> np.ndarray:
    """Basis of the right nullspace over GF(2), one vector per row."""
    A = as_gf2(M)
    R, pivots = row_reduce(A)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = R[i, fc]
    return basis


def in_rowspace(v, basis_rref: np.ndarray, pivots: list) -> bool:
    """Membership test against a precomputed RREF row basis."""
    w = np.array(v, dtype=np.uint8, copy=True) & 1
    for i, c in enumerate(pivots):
        if w[c]:
            w ^= basis_rref[i]
    return not w.any()


def triangular_split(C) -> tuple[np.ndarray, np.ndarray]:
    """Split a square matrix into L (entries with j <= i) and U (j > i);
    L XOR U reconstructs the input."""
    A = as_gf2(C)
    if A.shape[0] != A.shape[1]:
        raise ValueError("matrix is not square")
    L = np.tril(A)
    U = np.triu(A, k=1)
    return L, U


def block_compose(grid) -> np.ndarray:
    """Concatenate a 2-D arrangement of blocks; dimensions must be consistent
    per grid row and per grid column."""
    if not grid or not all(row for row in grid):
        raise ValueError("empty block grid")
    blocks = [[as_gf2(b) for b in row] for row in grid]
    ncols = len(blocks[0])
    for row in blocks:
        if len(row) != ncols:
            raise ValueError("ragged block grid")
    for row in blocks:
        if len({b.shape[0] for b in row}) != 1:
            raise ValueError("inconsistent block heights within a grid row")
    for j in range(ncols):
        if len({row[j].shape[1] for row in blocks}) != 1:
            raise ValueError("inconsistent block widths within a grid column")
    return np.block([[b for b in row] for row in blocks]).astype(np.uint8)
