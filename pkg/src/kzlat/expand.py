"""Basis expansion: make the first vector of a trailing block a shortest vector.

A sequence of 2x2 unimodular matrices built from extended-Euclid steps
eliminates the entries of the shortest-vector coefficients bottom-up; a
Givens rotation re-triangularizes R after each column operation.  The
improved variant skips iterations whose lower coefficient is zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BothZero, OverflowWatch
from .linalg import givens_pair

FLOAT_SAFE_MAX = 2**53


@dataclass
class ExpandStats:
    """Work counters for one expansion call."""

    euclid_calls: int = 0
    givens_calls: int = 0


def _ext_gcd_steps(p: int, q: int) -> tuple[int, int, int, int]:
    """Extended Euclid returning (d, a, b, iterations) with a*p + b*q = d > 0."""
    if p == 0 and q == 0:
        raise BothZero("gcd(0, 0) requested")
    old_r, r = p, q
    old_a, a = 1, 0
    old_b, b = 0, 1
    steps = 0
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_a, a = a, old_a - quot * a
        old_b, b = b, old_b - quot * b
        steps += 1
    d, ra, rb = old_r, old_a, old_b
    if d < 0:
        d, ra, rb = -d, -ra, -rb
    if q != 0:
        # pick the Bezout pair with minimal |a| (ties: minimal |b|)
        qd = abs(q) // d
        a0 = ra % qd
        cands = [a0, a0 - qd]
        cands.sort(key=lambda c: (abs(c), abs((d - c * p) // q)))
        ra = cands[0]
        rb = (d - ra * p) // q
    return d, ra, rb, steps


def ext_gcd(p: int, q: int) -> tuple[int, int, int]:
    """Return (d, a, b) with d = gcd(p, q) > 0, a*p + b*q = d, minimal pair."""
    d, a, b, _ = _ext_gcd_steps(int(p), int(q))
    return d, a, b


def unimodular_pair(p: int, q: int) -> np.ndarray:
    """2x2 integer U with det U = 1 and U^-1 (p, q)^T = (gcd(p, q), 0)^T."""
    d, a, b = ext_gcd(p, q)
    u = np.empty((2, 2), dtype=object)
    u[0, 0] = p // d
    u[0, 1] = -b
    u[1, 0] = q // d
    u[1, 1] = a
    return u


def _watch(values, watchdog: bool) -> None:
    if watchdog:
        for v in values:
            if abs(v) > FLOAT_SAFE_MAX:
                raise OverflowWatch(
                    f"integer magnitude {abs(v)} exceeds 2^53 during basis expansion"
                )


def _expand(
    r: np.ndarray,
    z: np.ndarray,
    k: int,
    coeffs,
    skip_zero: bool,
    watchdog: bool,
) -> ExpandStats:
    n = r.shape[0]
    x = [int(v) for v in coeffs]
    if len(x) != n - k:
        raise ValueError(f"coefficient vector must have length {n - k}, got {len(x)}")
    stats = ExpandStats()
    for i in range(n - k - 2, -1, -1):
        if x[i] == 0 and x[i + 1] == 0:
            continue
        if skip_zero and x[i + 1] == 0:
            continue
        d, a, b = ext_gcd(x[i], x[i + 1])
        stats.euclid_calls += 1
        u00, u01 = x[i] // d, -b
        u10, u11 = x[i + 1] // d, a
        _watch((u00, u01, u10, u11, d), watchdog)
        c0, c1 = k + i, k + i + 1
        # column operation: (col_c0, col_c1) <- (col_c0, col_c1) @ U
        r0 = r[: c1 + 1, c0].copy()
        r1 = r[: c1 + 1, c1].copy()
        r[: c1 + 1, c0] = u00 * r0 + u10 * r1
        r[: c1 + 1, c1] = u01 * r0 + u11 * r1
        z0 = z[:, c0].copy()
        z1 = z[:, c1].copy()
        z[:, c0] = u00 * z0 + u10 * z1
        z[:, c1] = u01 * z0 + u11 * z1
        if watchdog:
            _watch(z[:, c0], True)
            _watch(z[:, c1], True)
        x[i] = d
        # re-triangularize rows c0, c1
        if r[c1, c0] != 0.0:
            gc, gs, rr = givens_pair(r[c0, c0], r[c1, c0])
            stats.givens_calls += 1
            top = gc * r[c0, c0:] + gs * r[c1, c0:]
            bot = -gs * r[c0, c0:] + gc * r[c1, c0:]
            r[c0, c0:] = top
            r[c1, c0:] = bot
            r[c0, c0] = rr
            r[c1, c0] = 0.0
    return stats


def basis_expand_zqw(
    r: np.ndarray,
    z: np.ndarray,
    k: int,
    x,
    watchdog: bool = False,
) -> ExpandStats:
    """Baseline expansion: eliminate every coefficient pair bottom-up.

    Updates r and z in place so that |r_kk| becomes the norm of the lattice
    vector with coefficients x on the trailing block R[k:, k:].  Indices are
    0-based.  With watchdog=True, raises OverflowWatch when any intermediate
    integer magnitude exceeds 2^53.
    """
    return _expand(r, z, k, x, skip_zero=False, watchdog=watchdog)


def basis_expand_improved(
    r: np.ndarray,
    z: np.ndarray,
    k: int,
    zvec,
    watchdog: bool = False,
) -> ExpandStats:
    """Expansion that skips iterations whose lower coefficient is zero.

    Mathematically equivalent to basis_expand_zqw up to column signs; the
    caller is expected to skip the call entirely when zvec is +-e_1.
    """
    return _expand(r, z, k, zvec, skip_zero=True, watchdog=watchdog)
