"""End-to-end KZ reduction pipelines: baseline and improved.

Both take a full-column-rank basis matrix, QR-factorize it, and drive the
R-factor to the KZ shape (each diagonal entry is the shortest-vector norm
of its trailing block) while accumulating the exact unimodular transform.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import OverflowWatch
from .expand import FLOAT_SAFE_MAX, basis_expand_improved, basis_expand_zqw
from .linalg import FlopCounter, identity_unimodular, qr_factorize, to_float
from .lll import LLLParams, ReducedBasis, lll_reduce, size_reduce
from .svp import lll_aided_svp, se_search_improved


@dataclass
class KzStats:
    """Optional per-run bookkeeping filled in by the reduction pipelines."""

    svp_solutions: list = field(default_factory=list)
    e1_skips: int = 0
    expansions: int = 0
    search: FlopCounter = field(default_factory=FlopCounter)


def _is_unit_vector(v) -> bool:
    """True iff v is +e_1 or -e_1."""
    return abs(v[0]) == 1 and all(c == 0 for c in v[1:])


def kz_reduce_zqw(
    a: np.ndarray,
    params: LLLParams | None = None,
    watchdog: bool = False,
    stats: KzStats | None = None,
) -> ReducedBasis:
    """Baseline KZ reduction.

    At each step k the SVP on the trailing block is solved by LLL-aided
    Schnorr-Euchner search, the solution is mapped back to the unreduced
    coordinates, and the basis is expanded there.  The mapped-back
    coefficients can be huge for ill-conditioned inputs; with watchdog=True
    an OverflowWatch is raised as soon as any integer magnitude passes 2^53.
    """
    if params is None:
        params = LLLParams()
    r = qr_factorize(a).r.copy()
    n = r.shape[0]
    z = identity_unimodular(n)
    for k in range(n - 1):
        sol = lll_aided_svp(r[k:, k:], params, "original")
        if stats is not None:
            stats.svp_solutions.append(sol.x)
            stats.search.merge(sol.counters)
        if watchdog:
            for v in sol.x:
                if abs(v) > FLOAT_SAFE_MAX:
                    raise OverflowWatch(
                        f"SVP coefficient magnitude {abs(v)} exceeds 2^53"
                    )
        basis_expand_zqw(r, z, k, sol.x, watchdog=watchdog)
        if stats is not None:
            stats.expansions += 1
    size_reduce(r, z)
    return ReducedBasis(r=r, z=z)


def kz_reduce_improved(
    a: np.ndarray,
    params: LLLParams | None = None,
    watchdog: bool = False,
    stats: KzStats | None = None,
) -> ReducedBasis:
    """Improved KZ reduction.

    At each step the trailing block is LLL-reduced in place (the transform is
    folded into R and Z), the reduced SVP is solved with the improved search,
    and expansion happens in the reduced coordinates, where the entry
    bounds on SVP solutions keep the integers small.  When the solution is +-e_1 the
    expansion is skipped entirely.
    """
    if params is None:
        params = LLLParams()
    r = qr_factorize(a).r.copy()
    n = r.shape[0]
    z = identity_unimodular(n)
    for k in range(n - 1):
        red = lll_reduce(r[k:, k:], params)
        if k > 0:
            r[:k, k:] = r[:k, k:] @ to_float(red.z)
        r[k:, k:] = red.r
        z[:, k:] = z[:, k:].dot(red.z)
        sol = se_search_improved(r[k:, k:])
        if stats is not None:
            stats.svp_solutions.append(sol.z)
            stats.search.merge(sol.counters)
        if _is_unit_vector(sol.z):
            if stats is not None:
                stats.e1_skips += 1
            continue
        basis_expand_improved(r, z, k, sol.z, watchdog=watchdog)
        if stats is not None:
            stats.expansions += 1
    size_reduce(r, z)
    return ReducedBasis(r=r, z=z)
