"""
Exception types raised by mgeo.

Most errors are plain ``ValueError``, ``TypeError`` or ``ImportError``. The classes below subclass them where a caller
has to tell cases apart.
"""


class BoundaryError(ValueError):
    """A gauge boundary is malformed or its radius lookup failed."""


class OrthogonalityPreconditionError(ValueError):
    """Inputs violate the orthogonality or unit-length precondition of an operation."""


class NormAxiomError(ArithmeticError):
    """An evaluated function contradicts a property every norm satisfies."""


class BracketError(RuntimeError):
    """A sign change could not be bracketed."""


class ConjugateSearchError(RuntimeError):
    """No pair of conjugate diameters was found."""
