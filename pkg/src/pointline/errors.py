"""Exception types shared across the package."""


class PointLineError(Exception):
    """Base class for all package-specific errors."""


class DomainError(PointLineError, ValueError):
    """An argument lies outside the operation's stated domain."""


class IdenticalPoints(DomainError):
    """Two distinct points were required but equal points were given."""


class TooFewPoints(DomainError):
    """The operation needs at least two points."""


class DuplicatePoint(DomainError):
    """A point set contained the same point twice."""


class InvalidCutoff(DomainError):
    """A series cutoff smaller than the series start index."""


class PreconditionViolated(DomainError):
    """A quantitative precondition (e.g. eps*n >= 2) does not hold."""


class Unresolved(PointLineError):
    """Interval enclosures still overlap at the refinement limit."""


class PointFormatError(PointLineError, ValueError):
    """A point-set file does not conform to the JSON format."""
