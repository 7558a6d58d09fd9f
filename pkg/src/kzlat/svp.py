"""Schnorr-Euchner enumeration for the SVP on an upper-triangular basis.

Three variants share one depth-first zig-zag engine:

* original      -- classic nearest-first enumeration over all integer vectors;
* dkwz          -- skips every candidate with a negative top-level entry
                   (mirror solutions are redundant);
* improved      -- generalizes the sign restriction to every level: whenever
                   all entries above the current level are zero, only
                   nonnegative values are enumerated there (zero passes the
                   all-zero prefix down, positive values cover both mirrors).

The initial radius is ||R e_1||_2 and shrinking requires strict improvement,
so the incumbent e_1 survives when it is already optimal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import FlopCounter, check_upper_triangular, round_tie_small
from .lll import LLLParams, lll_reduce


@dataclass
class SvpSolution:
    """A nonzero integer minimizer of ||R z||_2 with its search counters.

    ``z`` is the solution in the coordinates of the searched matrix;
    ``x`` is only set by lll_aided_svp and maps z back to the original
    (unreduced) coordinates.
    """

    z: tuple[int, ...]
    norm: float
    counters: FlopCounter
    x: tuple[int, ...] | None = None


_MODES = ("original", "dkwz", "improved")


def _enumerate(r: np.ndarray, mode: str) -> SvpSolution:
    r = check_upper_triangular(r)
    n = r.shape[0]
    counters = FlopCounter()

    best_sq = float(r[:, 0] @ r[:, 0])
    counters.flops += 2 * n
    best_z = np.zeros(n, dtype=np.int64)
    best_z[0] = 1

    acc = np.zeros(n)          # acc[k]: squared distance of levels above k
    center = np.zeros(n)
    z = np.zeros(n, dtype=np.int64)
    step = np.ones(n, dtype=np.int64)
    asc = np.zeros(n, dtype=bool)   # ascending-from-zero constraint active
    tail_zero = np.zeros(n, dtype=bool)

    def init_level(k: int) -> None:
        constrained = (mode == "dkwz" and k == n - 1) or (
            mode == "improved" and tail_zero[k]
        )
        asc[k] = constrained
        if constrained:
            z[k] = 0  # center is exactly 0 above an all-zero tail
        else:
            z[k] = round_tie_small(center[k])
            step[k] = 1 if center[k] - z[k] >= 0 else -1

    def advance(k: int) -> None:
        if asc[k]:
            z[k] += 1
        else:
            z[k] += step[k]
            step[k] = -step[k] - (1 if step[k] > 0 else -1)

    k = n - 1
    center[k] = 0.0
    tail_zero[k] = True
    init_level(k)

    while True:
        counters.nodes += 1
        t = (center[k] - z[k]) * r[k, k]
        d = acc[k] + t * t
        counters.flops += 4
        if d < best_sq:
            if k == 0:
                if np.any(z != 0):
                    best_sq = d
                    best_z = z.copy()
                advance(k)
            else:
                knext = k - 1
                acc[knext] = d
                s = float(r[knext, k:] @ z[k:])
                center[knext] = -s / r[knext, knext]
                counters.flops += 2 * (n - knext - 1) + 2
                tail_zero[knext] = tail_zero[k] and z[k] == 0
                k = knext
                init_level(k)
        else:
            # zig-zag visits values in nondecreasing distance order, so
            # nothing further on this level can improve: back up.
            k += 1
            if k == n:
                break
            advance(k)

    return SvpSolution(
        z=tuple(int(v) for v in best_z),
        norm=math.sqrt(best_sq),
        counters=counters,
    )


def se_search_original(r: np.ndarray) -> SvpSolution:
    """Classic Schnorr-Euchner SVP enumeration (global optimum)."""
    return _enumerate(r, "original")


def se_search_dkwz(r: np.ndarray) -> SvpSolution:
    """Schnorr-Euchner with the top-level sign restriction z_n >= 0."""
    return _enumerate(r, "dkwz")


def se_search_improved(r: np.ndarray) -> SvpSolution:
    """Schnorr-Euchner with the recursive sign restriction at every level."""
    return _enumerate(r, "improved")


_SEARCHERS = {
    "original": se_search_original,
    "dkwz": se_search_dkwz,
    "improved": se_search_improved,
}


def lll_aided_svp(
    r: np.ndarray, params: LLLParams | None = None, variant: str = "improved"
) -> SvpSolution:
    """LLL-reduce r, solve the reduced SVP, and map back to original coordinates.

    Returns a solution whose ``z`` is in reduced coordinates and whose ``x``
    satisfies ||R x||_2 == ||R_reduced z||_2 (x = Z_hat z, exact integers).
    """
    if variant not in _SEARCHERS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {_MODES}")
    red = lll_reduce(r, params)
    sol = _SEARCHERS[variant](red.r)
    zvec = np.array([int(v) for v in sol.z], dtype=object)
    x = red.z.dot(zvec)
    sol.x = tuple(int(v) for v in x)
    return sol
