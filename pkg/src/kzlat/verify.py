"""Independent certification of reduction outputs.

Everything here avoids the code paths it certifies: determinants are exact
(fraction-free elimination over Python ints), shortest-vector norms come
from a separate enumeration or an exhaustive grid sweep, and the R-factor
comparison re-runs QR on A @ Z instead of trusting accumulated rotations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionTooLarge, RankDeficient
from .linalg import RANK_TOL, qr_factorize, to_float
from .lll import LLLParams, is_lll_reduced, is_size_reduced
from .svp import se_search_original

CERTIFICATE_CAP = 14
BRUTE_FORCE_CAP = 8


@dataclass
class ReductionCertificate:
    size_reduced: bool
    lovasz: bool
    kz_condition: bool
    unimodular: bool
    reconstruction_ok: bool
    details: dict = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return (
            self.size_reduced
            and self.lovasz
            and self.kz_condition
            and self.unimodular
            and self.reconstruction_ok
        )


def exact_det_sign(z: np.ndarray) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination).

    Returns the full determinant value; the caller checks for +-1.
    """
    m = [[int(v) for v in row] for row in np.asarray(z)]
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("expected a square integer matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def orthogonality_defect(a: np.ndarray) -> float:
    """prod_i ||a_i||_2 / sqrt(det(A^T A)), computed in log space."""
    a = np.asarray(a, dtype=float)
    col_sq = np.sum(a * a, axis=0)
    if np.any(col_sq == 0.0):
        raise RankDeficient("zero column")
    sign, logdet = np.linalg.slogdet(a.T @ a)
    if sign <= 0:
        raise RankDeficient("A^T A is numerically singular")
    sv = np.linalg.svd(a, compute_uv=False)
    if sv[-1] <= RANK_TOL * sv[0]:
        raise RankDeficient("numerical rank below the column count")
    return float(np.exp(0.5 * np.sum(np.log(col_sq)) - 0.5 * logdet))


def brute_force_lambda(a: np.ndarray, box) -> float:
    """Exhaustive shortest-vector norm over |x_i| <= box_i, x != 0.

    ``box`` is a positive integer or a per-coordinate sequence of them.
    Correctness as a lambda(A) oracle requires the box to dominate the
    entry bounds of the (LLL-reduced) coefficient domain.  n <= 8 only.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[1]
    if n > BRUTE_FORCE_CAP:
        raise DimensionTooLarge(f"brute force capped at n={BRUTE_FORCE_CAP}, got {n}")
    boxes = [int(box)] * n if np.isscalar(box) else [int(b) for b in box]
    if len(boxes) != n or any(b < 1 for b in boxes):
        raise ValueError("box must be >= 1 (per coordinate)")
    tail_axes = [np.arange(-b, b + 1) for b in boxes[1:]]
    if tail_axes:
        grids = np.meshgrid(*tail_axes, indexing="ij")
        tail = np.stack([g.ravel() for g in grids]).astype(float)  # (n-1, N)
    else:
        tail = np.zeros((0, 1))
    best = np.inf
    for v in range(-boxes[0], boxes[0] + 1):
        pts = a[:, :1] * float(v) + a[:, 1:] @ tail
        sq = np.sum(pts * pts, axis=0)
        if v == 0 and tail.shape[0] > 0:
            sq[np.all(tail == 0.0, axis=0)] = np.inf
        elif v == 0:
            continue
        best = min(best, float(np.min(sq)))
    return float(np.sqrt(best))


def _sign_normalized(r: np.ndarray) -> np.ndarray:
    """Flip row signs so every diagonal entry is positive."""
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return signs[:, None] * r


def assert_kz_reduced(
    r: np.ndarray,
    z: np.ndarray,
    a: np.ndarray,
    delta: float = 0.99,
    cap: int = CERTIFICATE_CAP,
    rel_tol: float = 1e-9,
) -> ReductionCertificate:
    """Certify (r, z) as a KZ reduction of a against the definitions.

    Checks size reduction, the Lovasz condition at the given delta, the
    per-index shortest-vector condition via independent enumeration
    (se_search_original, regardless of which variant produced r), exact
    unimodularity of z, and that QR(a @ z) reproduces r up to row signs.
    """
    r = np.asarray(r, dtype=float)
    n = r.shape[0]
    if n > cap:
        raise DimensionTooLarge(f"certificate capped at n={cap}, got {n}")

    details: dict = {}
    size_ok = is_size_reduced(r)
    lov_ok = is_lll_reduced(r, LLLParams(delta))

    kz_per_index = []
    for i in range(n):
        lam = se_search_original(r[i:, i:]).norm
        ok = abs(abs(r[i, i]) - lam) <= rel_tol * max(lam, 1e-300)
        kz_per_index.append(ok)
        if not ok:
            details.setdefault("kz_violations", []).append(
                {"index": i + 1, "diag": abs(float(r[i, i])), "lambda": lam}
            )
    kz_ok = all(kz_per_index)
    details["kz_per_index"] = kz_per_index

    det = exact_det_sign(z)
    details["det_z"] = det
    uni_ok = abs(det) == 1

    az = np.asarray(a, dtype=float) @ to_float(z)
    try:
        r2 = qr_factorize(az).r
        scale = max(np.max(np.abs(r)), 1e-300)
        diff = np.max(np.abs(_sign_normalized(r2) - _sign_normalized(r)))
        details["reconstruction_err"] = float(diff / scale)
        rec_ok = bool(diff <= rel_tol * scale)
    except RankDeficient:
        rec_ok = False
        details["reconstruction_err"] = float("inf")

    return ReductionCertificate(
        size_reduced=size_ok,
        lovasz=lov_ok,
        kz_condition=kz_ok,
        unimodular=uni_ok,
        reconstruction_ok=rec_ok,
        details=details,
    )
