"""Exception classes shared across the pipeline.

Type invariant violations (bad constructor arguments) raise plain
``ValueError``; everything that can go wrong while *operating* on
well-formed values raises a :class:`RideComfortError` subclass so the
CLI can map failures onto stable exit codes.
"""


class RideComfortError(Exception):
    """Base class for all pipeline errors."""


class EmptySignal(RideComfortError):
    """Signal has no samples, or too few to form a series."""


class NonMonotonicTime(RideComfortError):
    """Timestamps are not increasing where they must be."""


class SignalTooShort(RideComfortError):
    """Series too short for the requested transform."""


class InvalidWindow(RideComfortError):
    """Smoothing or pulse window is not a valid width."""


class InvalidNormalization(RideComfortError):
    """Normalization scales are not strictly positive finite values."""


class FormatError(RideComfortError):
    """Structural problem in an input file (bad header, wrong arity)."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class ParseError(RideComfortError):
    """A field in an input file failed to parse."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class EventOutOfRange(RideComfortError):
    """A discomfort event falls outside the accelerometer log's span."""

    def __init__(self, event: float, message: str = ""):
        super().__init__(message or f"event at {event} s lies outside the log span")
        self.event = event


class DegenerateLabels(RideComfortError):
    """Labels unusable for fitting (single class, or far too few rows)."""


class SeparationDetected(RideComfortError):
    """Complete separation: unpenalized coefficients diverge.

    Retry with a positive ridge penalty to obtain a finite fit.
    """


class NumericalFailure(RideComfortError):
    """The solver hit a singular or non-finite linear system."""


class UnitMismatch(RideComfortError):
    """Series unit tag does not match what the operation expects."""


class LengthMismatch(RideComfortError):
    """Two aligned vectors have different lengths."""


class DuplicateLine(RideComfortError):
    """Two reports claim the same line id."""


class EmptyProfile(RideComfortError):
    """Trip profile contains no segments."""


class EmptyReport(RideComfortError):
    """No reports supplied where at least one is required."""
