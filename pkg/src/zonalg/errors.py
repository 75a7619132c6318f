"""Exception types shared across the package."""


class ZonalgError(Exception):
    pass


class InvalidInputError(ZonalgError):
    """Malformed construction arguments (negative lengths, bad matrices, ...)."""


class UnsupportedRepresentationError(ZonalgError):
    """Operation requires a pure zonogon but the body carries a disc component."""


class DomainError(ZonalgError):
    """Argument outside the mathematical domain of the operation."""


class DegenerateDirectionError(DomainError):
    """A direction needed by the construction vanishes (e.g. zero perimeter)."""


class NumericError(ZonalgError):
    """A numerical solve failed (singular system, lost positive definiteness)."""
