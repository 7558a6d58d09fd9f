"""Closed-form reduction-quality bounds.

Hermite-constant values and bounds, the KZ constant bound f, the column
bound g, the orthogonality-defect factor h, SVP solution entry bounds for
LLL-reduced bases, decoding-radius / proximity-factor formulas, and the
prior-work comparison bounds used in ratio plots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import DomainError, UnknownHermiteConstant


@dataclass
class BoundReport:
    n: int
    value: float
    formula_id: str


# exact Hermite constants, known dimensions only
_HERMITE_EXACT = {
    1: 1.0,
    2: 2.0 / math.sqrt(3.0),
    3: 2.0 ** (1.0 / 3.0),
    4: math.sqrt(2.0),
    5: 8.0 ** (1.0 / 5.0),
    6: (64.0 / 3.0) ** (1.0 / 6.0),
    7: 64.0 ** (1.0 / 7.0),
    8: 2.0,
    24: 4.0,
}

# closed forms of the KZ constant bound f for n <= 8
_F_SMALL = [
    1.0,
    4.0 / 3.0,
    2.0 ** (3.0 / 2.0) / math.sqrt(3.0),
    2.0 ** (11.0 / 6.0) / math.sqrt(3.0),
    2.0 ** (25.0 / 12.0) / math.sqrt(3.0),
    2.0 ** (161.0 / 60.0) / 3.0 ** (7.0 / 10.0),
    2.0 ** (161.0 / 60.0) / 3.0 ** (8.0 / 15.0),
    2.0 ** (1227.0 / 420.0) / 3.0 ** (8.0 / 15.0),
]

# printed (rounded-up) column-bound values g for i <= 8
_G_SMALL = [1.0, 1.34, 1.75, 2.27, 2.89, 3.64, 4.54, 5.60]

# orthogonality-defect factor h for n <= 8
_H_SMALL = [
    1.0,
    2.0 / math.sqrt(3.0),
    math.sqrt(2.0),
    2.0,
    math.sqrt(8.0),
    8.0 / math.sqrt(3.0),
    8.0,
    16.0,
]


def _require_int_ge(n, low: int, name: str = "n") -> int:
    n = int(n)
    if n < low:
        raise DomainError(f"{name} must be >= {low}, got {n}")
    return n


def hermite_exact(n: int) -> float:
    """Exact Hermite constant; known only for n in 1..8 and 24."""
    n = int(n)
    if n not in _HERMITE_EXACT:
        raise UnknownHermiteConstant(f"exact Hermite constant unknown for n={n}")
    return _HERMITE_EXACT[n]


def hermite_linear_bound(n: int) -> float:
    """Linear upper bound n/8 + 6/5 on the Hermite constant (n >= 1)."""
    n = _require_int_ge(n, 1)
    return n / 8.0 + 6.0 / 5.0


def blichfeldt_bound(n: int) -> float:
    """Blichfeldt's bound (2/pi) * Gamma(2 + n/2)^(2/n), via log-gamma."""
    n = _require_int_ge(n, 1)
    return (2.0 / math.pi) * math.exp((2.0 / n) * gammaln(2.0 + n / 2.0))


def neu17_linear_bound(n: int) -> float:
    """Prior linear bound n/7 + 6/7, valid for n >= 3."""
    n = _require_int_ge(n, 3)
    return n / 7.0 + 6.0 / 7.0


def kz_constant_bound(n: int) -> float:
    """Upper bound f(n) on the KZ constant."""
    n = _require_int_ge(n, 1)
    if n <= 8:
        return _F_SMALL[n - 1]
    t = (n - 1) / 8.0
    return 7.0 * (n / 8.0 + 6.0 / 5.0) * t ** (0.5 * math.log(t))


def hanrot_stehle_bound(n: int) -> float:
    """Prior KZ-constant bound n * prod_{k=2..n} k^(1/(k-1)), n >= 2."""
    n = _require_int_ge(n, 2)
    log_prod = sum(math.log(k) / (k - 1) for k in range(2, n + 1))
    return n * math.exp(log_prod)


def column_ratio_bound(i: int, exact: bool = False) -> float:
    """Upper bound g(i) on ||R_{1:i,i}||^2 / r_ii^2 for KZ-reduced R.

    For i <= 8 returns the printed roundings by default; with exact=True
    returns the underlying partial sum 1 + (1/4) * sum_{k=2..i} f(k).
    """
    i = _require_int_ge(i, 1, "i")
    if i <= 8:
        if exact:
            return 1.0 + 0.25 * sum(kz_constant_bound(k) for k in range(2, i + 1))
        return _G_SMALL[i - 1]
    t = (i - 1) / 8.0
    return 5.6 + 7.0 * (i - 8) * (5 * i + 141) / 320.0 * t ** (0.5 * math.log(t))


def od_h(n: int) -> float:
    """The dimension factor h(n) of the orthogonality-defect bound."""
    n = _require_int_ge(n, 1)
    if n <= 8:
        return _H_SMALL[n - 1]
    return (n / 8.0 + 6.0 / 5.0) ** (n / 2.0)


def od_bound(n: int) -> float:
    """Upper bound h(n) * prod_{i=1..n} sqrt(i+3)/2 on the orthogonality
    defect of a KZ-reduced basis; evaluated in log space."""
    n = _require_int_ge(n, 1)
    log_h = (n / 2.0) * math.log(n / 8.0 + 6.0 / 5.0) if n >= 9 else math.log(
        _H_SMALL[n - 1]
    )
    log_prod = 0.5 * sum(math.log(i + 3) for i in range(1, n + 1)) - n * math.log(2.0)
    return math.exp(log_h + log_prod)


def boosted_diag_bound(i: int) -> float:
    """Prior-work bound (8i/9) (i-1)^(ln(i-1)/2) on r_11^2 / r_ii^2, i >= 2."""
    i = _require_int_ge(i, 2, "i")
    t = float(i - 1)
    return (8.0 * i / 9.0) * t ** (0.5 * math.log(t))


def boosted_column_bound(i: int) -> float:
    """Prior-work bound 1 + (2i/9)(i-1)^(1 + ln(i-1)/2) on the column ratio."""
    i = _require_int_ge(i, 2, "i")
    t = float(i - 1)
    return 1.0 + (2.0 * i / 9.0) * t ** (1.0 + 0.5 * math.log(t))


def boosted_od_bound(n: int) -> float:
    """Prior-work orthogonality-defect bound
    (sqrt(n)/2) * prod_{i=1..n-1} sqrt(i+3)/2 * (2n/3)^(n/2)."""
    n = _require_int_ge(n, 1)
    log_prod = 0.5 * sum(math.log(i + 3) for i in range(1, n)) - (n - 1) * math.log(2.0)
    return math.exp(
        0.5 * math.log(n) - math.log(2.0) + log_prod + (n / 2.0) * math.log(2.0 * n / 3.0)
    )


def svp_alpha(delta: float) -> float:
    """alpha = 2 / sqrt(4 delta - 1), the diagonal-ratio base for LLL."""
    if not 0.25 < delta <= 1.0:
        raise DomainError(f"delta must satisfy 1/4 < delta <= 1, got {delta}")
    return 2.0 / math.sqrt(4.0 * delta - 1.0)


def svp_entry_factor(n: int, i: int, delta: float) -> float:
    """The square-root factor of the SVP entry bound.

    At i = n the numerator and denominator coincide algebraically
    (both equal 1 - 9 alpha^2 / 4), so the factor is exactly 1.
    """
    n = _require_int_ge(n, 1)
    if not 1 <= i <= n:
        raise DomainError(f"need 1 <= i <= n, got i={i}, n={n}")
    if i == n:
        return 1.0
    alpha = svp_alpha(delta)
    beta = (1.5 * alpha) ** 2
    num = 1.0 - 2.0 * alpha**2 - beta ** (n - i + 1) / 9.0
    den = 1.0 - beta
    return math.sqrt(num / den)


def svp_entry_bound(n: int, i: int, delta: float) -> float:
    """Bound on |z_i| for any SVP solution over an LLL-reduced basis."""
    alpha = svp_alpha(delta)
    return svp_entry_factor(n, i, delta) * alpha ** (i - 1)


def lemma1_envelope(n: int) -> np.ndarray:
    """Elementwise envelope of |R_hat^{-1}| for a size-reduced unit-diagonal
    upper-triangular matrix: u_ii = 1, u_ij = (1/2)(3/2)^(j-i-1) for i < j."""
    n = _require_int_ge(n, 1)
    u = np.zeros((n, n))
    for i in range(n):
        u[i, i] = 1.0
        for j in range(i + 1, n):
            u[i, j] = 0.5 * 1.5 ** (j - i - 1)
    return u


_REMARK_KINDS = ("lll_sic_radius", "kz_sic_radius", "prox_sic", "prox_zf")


def remark_bounds(
    kind: str,
    n: int,
    lam: float | None = None,
    delta: float | None = None,
) -> float:
    """Decoding-radius and proximity-factor formulas built on f and the
    Hermite bounds.

    kinds: lll_sic_radius(n, lam, delta), kz_sic_radius(n, lam),
    prox_sic(n), prox_zf(n).
    """
    if kind not in _REMARK_KINDS:
        raise DomainError(f"unknown kind {kind!r}, expected one of {_REMARK_KINDS}")
    n = _require_int_ge(n, 1)
    if kind == "lll_sic_radius":
        if lam is None or lam <= 0 or delta is None:
            raise DomainError("lll_sic_radius needs lam > 0 and delta")
        if not 0.25 < delta <= 1.0:
            raise DomainError(f"delta must satisfy 1/4 < delta <= 1, got {delta}")
        if n < 2:
            raise DomainError("lll_sic_radius needs n >= 2")
        scale = lam * (delta - 0.25) ** ((n - 1) / 4.0)
        if n <= 8:
            return scale / (2.0 * math.sqrt(2.0))
        return scale / (2.0 * math.sqrt((5.0 * n + 48.0) / 40.0))
    if kind == "kz_sic_radius":
        if lam is None or lam <= 0:
            raise DomainError("kz_sic_radius needs lam > 0")
        return lam / (2.0 * math.sqrt(kz_constant_bound(n)))
    if kind == "prox_sic":
        return kz_constant_bound(n)
    # prox_zf
    return 1.0 + 0.2 * ((9.0 / 4.0) ** (n - 1) - 1.0) * kz_constant_bound(n)
