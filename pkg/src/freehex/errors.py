"""Error types shared across the package."""


class FreehexError(Exception):
    """Base class for all domain errors raised by this package."""


class SizeTooLarge(FreehexError):
    """Definitional Pfaffian requested beyond its combinatorial guard."""


class OddSize(FreehexError):
    """Pfaffian requested for an odd-sized matrix."""


class SingularParameter(FreehexError):
    """A parameter choice makes a required denominator vanish."""


class HoleOutOfRegion(FreehexError):
    """Gap position k outside the admissible range 0 <= k <= n-1."""


class DegenerateRegion(FreehexError):
    """Region parameters do not describe a two-dimensional region."""


class TooLarge(FreehexError):
    """Input exceeds a brute-force or growth guard."""


class NonIntegerResult(FreehexError):
    """An exact computation that must produce an integer did not."""


class PoleInRange(FreehexError):
    """Integrand has a pole inside the integration interval."""


class NoConvergence(FreehexError):
    """Quadrature refinement limit reached before the tolerance."""
