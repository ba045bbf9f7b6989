"""Exception types shared across the library.

ValueError is reserved for bad arguments (precondition violations); the
classes below flag data that passed the argument checks but broke a
numerical or file-format contract.
"""


class EntsearchError(Exception):
    """Base class for data and invariant failures."""


class StateFormatError(EntsearchError):
    """A state file is malformed or violates the normalization contract."""


class InvariantViolationError(EntsearchError):
    """A numerical object broke one of its defining invariants."""


class DegenerateHistogramError(EntsearchError):
    """Too few states survived plateau filtering to build a histogram."""
