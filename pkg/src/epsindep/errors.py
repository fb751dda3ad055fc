class EpsIndepError(Exception):
    """Base class for all library errors."""


class EnumerationLimitError(EpsIndepError):
    """Requested enumeration exceeds the configured size cap."""


class DimensionMismatchError(EpsIndepError):
    """Objects built over different ground-set sizes were combined."""


class DomainError(EpsIndepError):
    """A stated precondition on the inputs does not hold."""


class TableError(EpsIndepError):
    """Missing, too-short, or wrong-kind cumulant/moment data."""


class InputError(EpsIndepError):
    """Malformed external input (JSON files, CLI arguments)."""
