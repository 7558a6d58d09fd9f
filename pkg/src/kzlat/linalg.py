"""Dense real matrix support: QR, Givens pairs, tie-aware rounding, counters.

Matrices are plain numpy float arrays; integer (unimodular) matrices are
numpy arrays of dtype=object holding Python ints so they can never overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateRotation, RankDeficient

RANK_TOL = 1e-10


@dataclass
class FlopCounter:
    """Arithmetic counters for one search invocation.

    Convention: each real +, -, *, /, sqrt counts 1 flop; comparisons and
    integer index arithmetic count 0.  ``nodes`` is the number of partial
    assignments whose partial norm is evaluated during enumeration.
    """

    flops: int = 0
    nodes: int = 0

    def merge(self, other: "FlopCounter") -> None:
        self.flops += other.flops
        self.nodes += other.nodes


@dataclass
class QRFactors:
    q: np.ndarray  # m x n, orthonormal columns
    r: np.ndarray  # n x n, upper triangular, nonsingular


def round_tie_small(x: float) -> int:
    """Round to the nearest integer; on .5 ties pick the smaller magnitude.

    round_tie_small(0.5) == 0 and round_tie_small(-1.5) == -1.
    """
    f = math.floor(x)
    frac = x - f
    if frac < 0.5:
        return f
    if frac > 0.5:
        return f + 1
    lo, hi = f, f + 1
    return lo if abs(lo) <= abs(hi) else hi


def givens_pair(a: float, b: float) -> tuple[float, float, float]:
    """Return (c, s, r) with [c s; -s c] @ [a; b] == [r; 0] and c^2+s^2 == 1."""
    if a == 0.0 and b == 0.0:
        raise DegenerateRotation("givens_pair requires (a, b) != (0, 0)")
    r = math.hypot(a, b)
    return a / r, b / r, r


def check_basis(a: np.ndarray) -> np.ndarray:
    """Validate a basis matrix: m >= n >= 1 and full numerical column rank."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] < a.shape[1] or a.shape[1] < 1:
        raise RankDeficient(f"expected m >= n >= 1, got shape {a.shape}")
    sv = np.linalg.svd(a, compute_uv=False)
    if sv[-1] <= RANK_TOL * sv[0]:
        raise RankDeficient(
            f"numerical rank below {a.shape[1]} (sigma_min/sigma_max = "
            f"{sv[-1] / sv[0]:.3e})"
        )
    return a


def check_upper_triangular(r: np.ndarray) -> np.ndarray:
    """Validate a nonsingular upper-triangular matrix."""
    r = np.asarray(r, dtype=float)
    if r.ndim != 2 or r.shape[0] != r.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {r.shape}")
    if np.any(np.tril(r, -1) != 0.0):
        raise ValueError("entries below the diagonal must be exactly zero")
    if np.any(np.diag(r) == 0.0):
        raise ValueError("all diagonal entries must be nonzero")
    return r


def qr_factorize(a: np.ndarray) -> QRFactors:
    """Thin QR factorization (Householder, via LAPACK).

    Diagonal signs of R are left unconstrained; downstream checks compare
    |r_ii| or sign-normalize.  Raises RankDeficient on rank loss.
    """
    a = check_basis(a)
    q, r = np.linalg.qr(a, mode="reduced")
    return QRFactors(q=q, r=r)


def identity_unimodular(n: int) -> np.ndarray:
    """n x n identity with Python-int entries (dtype=object)."""
    z = np.zeros((n, n), dtype=object)
    for i in range(n):
        z[i, i] = 1
    return z


def to_float(z: np.ndarray) -> np.ndarray:
    """Convert an object integer matrix to float64."""
    return np.asarray(z, dtype=float) if z.dtype != object else np.array(
        [[float(v) for v in row] for row in z], dtype=float
    )


# --- matrix text format -----------------------------------------------------
# line 1: "m n"; then m lines of n whitespace-separated decimal numbers,
# round-trip exact at 17 significant digits.


def write_matrix(a: np.ndarray, path) -> None:
    a = np.asarray(a)
    m, n = a.shape
    with open(path, "w") as fh:
        fh.write(f"{m} {n}\n")
        for i in range(m):
            if a.dtype == object:
                fh.write(" ".join(str(int(v)) for v in a[i]) + "\n")
            else:
                fh.write(" ".join(f"{float(v):.17g}" for v in a[i]) + "\n")


def read_matrix(path) -> np.ndarray:
    with open(path) as fh:
        header = fh.readline().split()
        m, n = int(header[0]), int(header[1])
        rows = []
        for _ in range(m):
            rows.append([float(tok) for tok in fh.readline().split()])
    a = np.array(rows, dtype=float)
    if a.shape != (m, n):
        raise ValueError(f"expected {m}x{n} matrix, read shape {a.shape}")
    return a


def read_int_matrix(path) -> np.ndarray:
    with open(path) as fh:
        header = fh.readline().split()
        m, n = int(header[0]), int(header[1])
        rows = []
        for _ in range(m):
            rows.append([int(tok) for tok in fh.readline().split()])
    z = np.array(rows, dtype=object)
    if z.shape != (m, n):
        raise ValueError(f"expected {m}x{n} matrix, read shape {z.shape}")
    return z
