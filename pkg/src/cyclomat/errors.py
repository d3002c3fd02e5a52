"""Exception types raised across the package.

Every error is a subclass of CyclomatError so callers can catch the whole
family; names mirror the condition they report.
"""


class CyclomatError(Exception):
    """Base class for all cyclomat errors."""


class EvenP(CyclomatError):
    """Characteristic 2 (or any even p) requested; only odd primes are supported."""


class CompositeP(CyclomatError):
    """p failed the primality test."""


class ReducibleModulus(CyclomatError):
    """Supplied modulus polynomial is not irreducible over F_p."""


class NoModulusAvailable(CyclomatError):
    """No built-in modulus for (p, n) and exhaustive search was disabled."""


class NotAGenerator(CyclomatError):
    """User-supplied generator does not have full multiplicative order."""


class ZeroElement(CyclomatError):
    """Discrete logarithm of the zero element requested."""


class DimensionMismatch(CyclomatError):
    """Matrix operands are not conformable."""


class InvalidEll(CyclomatError):
    """ell does not divide q - 1 (or is not positive)."""


class EllTooSmall(CyclomatError):
    """Operation needs ell >= 2 (minor extraction) or ell >= 4 (column survey)."""


class EllOne(CyclomatError):
    """Difference-set layer excludes the degenerate case ell = 1."""


class KEven(CyclomatError):
    """Operation is defined only for odd k (nonzero half-shift)."""


class ContextTooLarge(CyclomatError):
    """Field exceeds the size guard for an exhaustive verification."""


class NotADifferenceSet(CyclomatError):
    """Certificate operation called on a context that is not a difference set."""


class RangeTooLarge(CyclomatError):
    """Search range exceeds the desk-scale bound."""


class IoFailure(CyclomatError):
    """Emission to an output stream failed."""
