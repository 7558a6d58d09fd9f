"""Shared test utilities: independent oracles and instance generators."""

import numpy as np

from kzlat import lll_reduce, qr_factorize
from kzlat.lll import LLLParams


def gram_schmidt_qr(a):
    """Textbook modified Gram-Schmidt QR, independent of numpy.linalg.qr.

    Returns (q, r) with positive diagonal in r.
    """
    a = np.asarray(a, dtype=float)
    m, n = a.shape
    q = np.zeros((m, n))
    r = np.zeros((n, n))
    for j in range(n):
        v = a[:, j].copy()
        for i in range(j):
            r[i, j] = q[:, i] @ v
            v -= r[i, j] * q[:, i]
        r[j, j] = np.linalg.norm(v)
        q[:, j] = v / r[j, j]
    return q, r


def sign_normalize_rows(r):
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return signs[:, None] * r


def random_lll_r(dim, seed, delta=0.99):
    """Random LLL-reduced upper-triangular instance of the given dimension."""
    rng = np.random.Generator(np.random.PCG64(seed))
    a = rng.normal(size=(dim, dim))
    return lll_reduce(qr_factorize(a).r, LLLParams(delta)).r


def cofactor_det(m):
    """Exact integer determinant by cofactor expansion (slow, small n only)."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total
