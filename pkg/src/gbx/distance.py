"""Exact brute-force CSS minimum distance for small codes.

The CSS structure decouples the two sectors: the X-distance is the minimum
weight over ker(H_Z) \\ rowspace(H_X), the Z-distance over
ker(H_X) \\ rowspace(H_Z), and d is the smaller of the two. Kernels are
enumerated in full (Gray-code walk over the span), guarded by a vector
budget.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import CssCode
from .gf2mat import nullspace, row_reduce

DEFAULT_BUDGET = 1 << 26


class BudgetExceeded(RuntimeError):
    """Enumeration space larger than the vector budget; carries the bound
    found so far (None when nothing was enumerated)."""

    def __init__(self, message, lower_bound=None):
        super().__init__(message)
        self.lower_bound = lower_bound


@dataclass
class DistanceResult:
    d: int
    witness: np.ndarray  # n-bit support of a minimal logical operator
    witness_sector: str  # "X" or "Z"
    exhausted_dim: int  # dimension of the enumerated kernel(s)
    exact: bool = True  # False when a cap stopped enumeration early


def _sector_min(kernel_checks: np.ndarray, stabilizer_rows: np.ndarray,
                budget: int, cap=None):
    """Minimal-weight kernel vector outside the stabilizer rowspace.

    Returns (weight, witness, dim, exact). ``exact`` is False when the cap
    triggered an early exit (a logical of weight < cap suffices).
    """
    basis = nullspace(kernel_checks)
    dim = basis.shape[0]
    if dim == 0:
        return None, None, 0, True
    if 1 << dim > budget:
        raise BudgetExceeded(f"kernel dimension {dim} exceeds the budget")
    rref, pivots = row_reduce(stabilizer_rows)
    rref = rref[: len(pivots)]
    piv_cols = np.array(pivots, dtype=np.int64)

    best = None
    witness = None
    v = np.zeros(basis.shape[1], dtype=np.uint8)
    for g in range(1, 1 << dim):
        # Gray-code walk: flip the basis vector indexed by the lowest set bit
        flip = (g & -g).bit_length() - 1
        v ^= basis[flip]
        w = int(v.sum())
        if best is not None and w >= best:
            continue
        # reduce against the stabilizer rowspace; nonzero residue == logical
        u = v.copy()
        for i, c in enumerate(piv_cols):
            if u[c]:
                u ^= rref[i]
        if u.any():
            best = w
            witness = v.copy()
            if cap is not None and best < cap:
                return best, witness, dim, False
    return best, witness, dim, True


def min_distance(code: CssCode, cap=None, budget: int = DEFAULT_BUDGET
                 ) -> DistanceResult:
    """Exact minimum distance by kernel enumeration.

    With ``cap`` set, enumeration stops as soon as a logical operator of
    weight below the cap is found (enough to reject a candidate code); the
    returned ``d`` is then an upper bound and ``exact`` is False.
    """
    if code.k < 1:
        raise ValueError("code has no logical operators (k = 0)")
    dx, wx, dim_x, exact_x = _sector_min(code.hz, code.hx, budget, cap)
    if not exact_x and cap is not None:
        return DistanceResult(dx, wx, "X", dim_x, exact=False)
    dz, wz, dim_z, exact_z = _sector_min(code.hx, code.hz, budget, cap)
    candidates = [(d, w, s) for d, w, s in
                  ((dx, wx, "X"), (dz, wz, "Z")) if d is not None]
    if not candidates:
        raise AssertionError("k >= 1 but no logical operator found")
    d, w, sector = min(candidates, key=lambda t: t[0])
    return DistanceResult(d, w, sector, dim_x + dim_z,
                          exact=exact_x and exact_z)
