"""Domain failures raised by the cantorinfo library.

Every class derives from ``ValueError`` so callers that only know the
builtin still catch them; the command line maps ``DomainError`` to exit
status 1 and leaves argument mistakes to the usage path.
"""


class DomainError(ValueError):
    """A well-formed request whose answer does not exist in the domain."""


class EmptySetError(DomainError):
    """The empty set has no index in the combinatorial number system."""


class NotInImageError(DomainError):
    """The value lies outside the image of the map being inverted."""


class GroundViolationError(DomainError):
    """A set contains an element outside its sort key's ground."""


class InfiniteColumnError(DomainError):
    """The requested column holds infinitely many sets."""


class SizeLimitError(DomainError):
    """An exhaustive enumeration was asked to exceed its bound."""


class DivergentLimitError(DomainError):
    """The requested limit does not exist as a finite number."""
