"""Exception types shared across the package."""


class LatticeError(Exception):
    """Base class for all kzlat errors."""


class RankDeficient(LatticeError):
    """Input matrix does not have full column rank (numerically)."""


class DegenerateRotation(LatticeError):
    """Givens rotation requested for the zero vector."""


class NonConvergence(LatticeError):
    """LLL swap count exceeded the configured cap."""


class BothZero(LatticeError):
    """gcd / unimodular pair requested for (0, 0)."""


class OverflowWatch(LatticeError):
    """53-bit watchdog tripped: an integer magnitude exceeded 2**53."""


class DimensionTooLarge(LatticeError):
    """Problem dimension above the cap for an enumeration-based routine."""


class DomainError(LatticeError, ValueError):
    """Argument outside the domain of a closed-form bound."""


class UnknownHermiteConstant(DomainError):
    """Exact Hermite constant is not known for this dimension."""


class SquareRootFailure(LatticeError):
    """Symmetric square root failed (matrix numerically not PSD)."""
