"""Exception taxonomy shared by all modules."""


class HarmonicSpacesError(Exception):
    """Base class for errors raised by this package."""


class NonConvergence(HarmonicSpacesError):
    """Quadrature error estimate stayed above tolerance after the subdivision
    budget; for an open endpoint this signals a non-integrable boundary."""


class DomainViolation(HarmonicSpacesError):
    """Evaluation requested outside the open domain of a radial function."""


class UnsupportedModel(HarmonicSpacesError):
    """The requested model is outside the catalogue for this operation."""


class InvalidPoint(HarmonicSpacesError):
    """A point does not satisfy the ambient-space invariants."""


class DepthInsufficient(HarmonicSpacesError):
    """Deck-group enumeration depth below the sufficiency bound for a query."""


class SelfCheckFailed(HarmonicSpacesError):
    """A deck-group action violated one of its defining identities."""
