"""LLL reduction of an upper-triangular matrix with accumulated transform.

Works directly on the R-factor: column operations keep R upper triangular
via 2x2 Givens rotations after swaps.  The unimodular transform Z is kept
in exact (Python int) arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, NonConvergence
from .linalg import (
    check_upper_triangular,
    givens_pair,
    identity_unimodular,
    round_tie_small,
)

SIZE_TOL = 1e-12      # relative slack for the size-reduced test
LOVASZ_TOL = 1e-12    # relative slack for the Lovasz test


@dataclass
class LLLParams:
    delta: float = 0.99
    swap_cap: int = 10_000_000

    def __post_init__(self):
        if not 0.25 < self.delta <= 1.0:
            raise DomainError(f"delta must satisfy 1/4 < delta <= 1, got {self.delta}")


@dataclass
class ReducedBasis:
    """Upper-triangular R together with the unimodular transform producing it."""

    r: np.ndarray
    z: np.ndarray  # dtype=object, exact integers


def _reduce_entry(r: np.ndarray, z: np.ndarray, i: int, k: int) -> None:
    """Size-reduce entry (i, k) of r, folding the multiplier into z."""
    mu = round_tie_small(r[i, k] / r[i, i])
    if mu != 0:
        r[: i + 1, k] -= mu * r[: i + 1, i]
        z[:, k] -= mu * z[:, i]


def size_reduce(r: np.ndarray, z: np.ndarray) -> None:
    """Full size-reduction pass on r in place; diagonals are untouched."""
    n = r.shape[0]
    for k in range(1, n):
        for i in range(k - 1, -1, -1):
            _reduce_entry(r, z, i, k)


def is_size_reduced(r: np.ndarray) -> bool:
    """Check |r_ij| <= |r_ii|/2 for all i < j, with a small relative slack."""
    r = np.asarray(r, dtype=float)
    n = r.shape[0]
    for i in range(n):
        bound = (0.5 + SIZE_TOL) * abs(r[i, i])
        if np.any(np.abs(r[i, i + 1 :]) > bound):
            return False
    return True


def is_lll_reduced(r: np.ndarray, params: LLLParams) -> bool:
    """Check the size-reduced and Lovasz conditions for the given delta."""
    if not is_size_reduced(r):
        return False
    r = np.asarray(r, dtype=float)
    n = r.shape[0]
    for i in range(n - 1):
        lhs = params.delta * r[i, i] ** 2
        rhs = r[i, i + 1] ** 2 + r[i + 1, i + 1] ** 2
        if lhs > rhs + LOVASZ_TOL * lhs:
            return False
    return True


def lll_reduce(r: np.ndarray, params: LLLParams | None = None) -> ReducedBasis:
    """LLL-reduce a nonsingular upper-triangular matrix.

    Returns new (R, Z) with R upper triangular satisfying both LLL
    conditions and Z unimodular such that the input lattice is preserved.
    Sweep order is lowest violating index first.  Raises NonConvergence
    if the swap count exceeds params.swap_cap.
    """
    if params is None:
        params = LLLParams()
    r = check_upper_triangular(r).copy()
    n = r.shape[0]
    z = identity_unimodular(n)
    swaps = 0
    k = 1
    while k < n:
        for i in range(k - 1, -1, -1):
            _reduce_entry(r, z, i, k)
        if params.delta * r[k - 1, k - 1] ** 2 > r[k - 1, k] ** 2 + r[k, k] ** 2:
            swaps += 1
            if swaps > params.swap_cap:
                raise NonConvergence(f"LLL exceeded {params.swap_cap} swaps")
            r[:, [k - 1, k]] = r[:, [k, k - 1]]
            z[:, [k - 1, k]] = z[:, [k, k - 1]]
            c, s, rr = givens_pair(r[k - 1, k - 1], r[k, k - 1])
            rows = r[k - 1 : k + 1, k - 1 :]
            top = c * rows[0] + s * rows[1]
            bot = -s * rows[0] + c * rows[1]
            rows[0], rows[1] = top, bot
            r[k - 1, k - 1] = rr
            r[k, k - 1] = 0.0
            k = max(k - 1, 1)
        else:
            k += 1
    return ReducedBasis(r=r, z=z)
